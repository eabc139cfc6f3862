use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::buchberger::reduced_basis;
use super::reduce::{reduce_terms, Leads};
use crate::error::{Error, Result};
use crate::polyring::{same_ring, Monomial, MonomialOrder, Polynomial, Ring};

/// Reduced Gröbner basis: monic elements sorted by ascending lead monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Computes the reduced basis of `gens` in `ring`.
    pub fn compute(ring: &Ring, gens: &[Polynomial]) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elements: reduced_basis(ring, gens),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.terms()[0].0).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, self)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        s_pairs_reduce(&self.ring, &self.elements)
    }

    /// Checks the reduced-basis shape: monic, no term divisible by another lead.
    pub fn is_reduced(&self) -> bool {
        let leads = self.lead_monomials();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.lead_coeff() == 1
                && g.terms().iter().all(|t| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(j, l)| !(l.divides(&t.0) && (i != j || t.0 != leads[i])))
                })
        })
    }

    /// Stable text digest of the basis, one element per line.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        for g in &self.elements {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

/// S-polynomial certificate for an arbitrary monic generating set.
pub fn s_pairs_reduce(ring: &Ring, elems: &[Polynomial]) -> bool {
    let monic: Vec<Polynomial> = elems.iter().map(|g| g.monic()).collect();
    let leads = Leads::from_basis(&monic);
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let (f, g) = (&monic[i], &monic[j]);
            let (lf, lg) = (f.terms()[0].0, g.terms()[0].0);
            let l = lf.lcm(&lg);
            let s = &f.mul_term(&lf.quotient_of(&l).unwrap(), 1)
                - &g.mul_term(&lg.quotient_of(&l).unwrap(), 1);
            let s = s.to_ring(ring).unwrap();
            if !reduce_terms(&s, &monic, &leads).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` on division by `G`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring().vars() != g.ring.vars() || f.field() != g.ring.field() {
        return Err(Error::RingMismatch);
    }
    let f = f.to_ring(&g.ring)?;
    let leads = Leads::from_basis(&g.elements);
    Ok(Polynomial::from_sorted_unchecked(
        &g.ring,
        reduce_terms(&f, &g.elements, &leads),
    ))
}

type Cache = Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>;

/// Ideal given by generators, with reduced bases cached per order.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Cache,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert!(same_ring(g.ring(), ring), "generator from another ring");
                g
            })
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::default(),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal `(x_0, ..., x_n)`.
    pub fn irrelevant(ring: &Ring) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect())
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, lines: &[S]) -> Result<Self> {
        let gens = lines
            .iter()
            .map(|l| Polynomial::parse(l.as_ref(), ring))
            .collect::<Result<_>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Sum with extra generators.
    pub fn add_gens(&self, more: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(more);
        Ideal::new(&self.ring, g)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.add_gens(other.gens.iter().cloned()))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ok(Ideal::new(&self.ring, g))
    }

    /// Reduced basis under the ring's own order.
    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.groebner_in(self.ring.order())
            .expect("ring order is always valid")
    }

    /// Reduced basis under `order`; the basis lives in a copy of the ring
    /// carrying that order.
    pub fn groebner_in(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let ring = if order == self.ring.order() {
            self.ring.clone()
        } else {
            self.ring.with_order(order.clone())?
        };
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ring))
            .collect::<Result<_>>()?;
        let gb = Arc::new(GroebnerBasis::compute(&ring, &gens));
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(order.clone()).or_insert(gb).clone())
    }

    /// Ideal generated by its own reduced basis, in the original ring.
    pub fn reduced(&self) -> Ideal {
        let gb = self.groebner();
        let id = Ideal::new(&self.ring, gb.elements().to_vec());
        id.cache
            .lock()
            .unwrap()
            .insert(self.ring.order().clone(), gb);
        id
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch);
        }
        self.groebner().reduces_to_zero(f)
    }

    /// Normal form modulo this ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch);
        }
        self.groebner().normal_form(f)
    }

    /// Same ideal in another ring, matching variables by name. Variables of
    /// this ring not present in `ring` must not occur in the generators.
    pub fn to_ring_by_names(&self, ring: &Ring) -> Result<Ideal> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        let mut missing = Vec::new();
        for (i, v) in self.ring.vars().iter().enumerate() {
            match ring.var_index(v) {
                Some(j) => map.push(j),
                None => {
                    map.push(0);
                    missing.push(i);
                }
            }
        }
        if ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            for &i in &missing {
                if g.degree_in(i) > 0 {
                    return Err(Error::UnknownVariable(self.ring.vars()[i].clone()));
                }
            }
            gens.push(g.permute_into(ring, &map));
        }
        Ok(Ideal::new(ring, gens))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal")?;
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// Reduced basis of `I` under `order`.
pub fn groebner_basis(i: &Ideal, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
    i.groebner_in(order)
}

/// `J ⊆ I`: every generator of `J` reduces to zero modulo `I`.
pub fn contains(i: &Ideal, j: &Ideal) -> Result<bool> {
    if !same_ring(&i.ring, &j.ring) {
        return Err(Error::RingMismatch);
    }
    let gb = i.groebner();
    for g in &j.gens {
        if !gb.reduces_to_zero(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of ideals via their reduced bases.
pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if !same_ring(&a.ring, &b.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(a.groebner().elements() == b.groebner().elements())
}
