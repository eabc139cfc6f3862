use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::ring::{same_ring, Ring};
use crate::error::{Error, Result};
use crate::modfield::PrimeField;

pub type Term = (Monomial, u32);

/// Sparse polynomial over F_p; terms are kept sorted in descending order
/// of the ring's monomial order and never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: u32) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: u32) -> Self {
        let c = c % ring.field().modulus();
        Polynomial {
            ring: ring.clone(),
            terms: if c == 0 { vec![] } else { vec![(m, c)] },
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::monomial(ring, Monomial::var(i), 1)
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var(ring, i))
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Self {
        let f = ring.field();
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.modulus();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn lead_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.1)
    }

    /// Coefficient of the given monomial.
    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map_or(0, |t| t.1)
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).min()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.0.degree() == t.0.degree()),
        }
    }

    /// Bit mask of variables occurring in some term.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |m, t| m | t.0.support_mask())
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.degree() == d)
                .copied()
                .collect(),
        }
    }

    /// Homogeneous component of minimal total degree.
    pub fn lowest_form(&self) -> Result<Polynomial> {
        let d = self.min_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    /// Lowest homogeneous component with respect to the degree in `vars` only.
    pub fn lowest_form_in(&self, vars: &[usize]) -> Result<Polynomial> {
        let deg = |m: &Monomial| vars.iter().map(|&v| m.exp(v)).sum::<u32>();
        let d = self
            .terms
            .iter()
            .map(|t| deg(&t.0))
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|t| deg(&t.0) == d).copied().collect(),
        })
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.field();
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.field();
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(n, a)| (n.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    /// Scales so the lead coefficient is 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) if c == 1 => self.clone(),
            Some(&(_, c)) => self.scale(self.field().inv(c).unwrap()),
        }
    }

    /// `self + c * other`, both in the same ring.
    pub fn add_scaled(&self, other: &Polynomial, c: u32) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let f = self.field();
        let order = self.ring.order();
        let c = c % f.modulus();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let v = f.mul(b[j].1, c);
                    if v != 0 {
                        out.push((b[j].0, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(a[i].1, f.mul(b[j].1, c));
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        if c != 0 {
            out.extend(b[j..].iter().map(|&(m, v)| (m, f.mul(v, c))));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let f = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.0.exp(var) > 0)
            .filter_map(|&(m, c)| {
                let e = m.exp(var);
                let v = f.mul(c, f.from_u64(e as u64));
                (v != 0).then(|| (m.with_exp(var, e - 1), v))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Value at a point given as residues, one per variable.
    pub fn eval(&self, point: &[u32]) -> u32 {
        let f = self.field();
        let n = self.ring.nvars();
        assert_eq!(point.len(), n, "point has wrong arity");
        let maxdeg: Vec<u32> = (0..n).map(|v| self.degree_in(v)).collect();
        let powers: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut p = Vec::with_capacity(maxdeg[v] as usize + 1);
                let mut acc = 1 % f.modulus();
                for _ in 0..=maxdeg[v] {
                    p.push(acc);
                    acc = f.mul(acc, point[v]);
                }
                p
            })
            .collect();
        self.terms.iter().fold(0, |acc, &(m, c)| {
            let mut t = c;
            for (v, pw) in powers.iter().enumerate() {
                let e = m.exp(v) as usize;
                if e > 0 {
                    t = f.mul(t, pw[e]);
                }
            }
            f.add(acc, t)
        })
    }

    /// Same polynomial viewed in a ring with identical variable count
    /// (typically the same names under another order).
    pub fn to_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() || ring.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        if same_ring(ring, &self.ring) {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Moves variable `i` of this ring to variable `map[i]` of `ring`.
    pub fn permute_into(&self, ring: &Ring, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let terms = self.terms.iter().map(|&(m, c)| (m.permuted(map), c)).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Canonical text, ring-independent formatting aside. Terms descend in
    /// the ring order with least nonnegative residues as coefficients.
    pub fn to_canonical_string(&self) -> String {
        format!("{self}")
    }

    /// Human-friendly text with symmetric residues and signs.
    pub fn to_signed_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = self.field();
        let mut s = String::new();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let v = f.to_signed(c);
            let mono = fmt_monomial(&self.ring, &m);
            let sign = if v < 0 { "-" } else { "+" };
            if k == 0 {
                if v < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            let a = v.unsigned_abs();
            match (a, mono.is_empty()) {
                (_, true) => s.push_str(&a.to_string()),
                (1, false) => s.push_str(&mono),
                (_, false) => s.push_str(&format!("{a}*{mono}")),
            }
        }
        s
    }
}

pub(crate) fn fmt_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, name) in ring.vars().iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(&self.ring, &m);
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{mono}")?,
                (_, false) => write!(f, "{c}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.to_signed_string())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, self.field().modulus() - 1)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.field().modulus() - 1)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.len() == 1 {
            let (m, c) = small.terms[0];
            return big.mul_term(&m, c);
        }
        let f = self.field();
        let p = f.modulus() as u64;
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(small.len() * big.len());
        for &(m1, c1) in &small.terms {
            for &(m2, c2) in &big.terms {
                let e = acc.entry(m1.mul(&m2)).or_insert(0);
                *e = (*e + c1 as u64 * c2 as u64) % p;
            }
        }
        let terms: Vec<Term> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (m, c as u32))
            .collect();
        let order = self.ring.order();
        let mut terms = terms;
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

/// Homogeneous component of `f` of minimal total degree.
pub fn lowest_form(f: &Polynomial) -> Result<Polynomial> {
    f.lowest_form()
}
