use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::modfield::PrimeField;

/// Dense univariate polynomial over F_p, coefficients from degree 0 up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.modulus();
        }
        let mut f = UniPoly { field, coeffs };
        f.trim();
        f
    }

    pub fn zero(field: PrimeField) -> Self {
        UniPoly { field, coeffs: vec![] }
    }

    pub fn x(field: PrimeField) -> Self {
        UniPoly::new(field, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let c = (1..self.coeffs.len())
            .map(|k| f.mul(self.coeffs[k], f.from_u64(k as u64)))
            .collect();
        UniPoly::new(f, c)
    }

    /// Monic product of the distinct irreducible factors (valid when the
    /// degree is below p).
    pub fn squarefree_part(&self) -> Self {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        self.div_rem(&self.gcd(&d)).0.monic()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).unwrap();
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&c| self.field.mul(c, inv)).collect(),
        }
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.field.sub(a, b)
            })
            .collect();
        UniPoly::new(self.field, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let p = self.field.modulus() as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        UniPoly::new(self.field, out.into_iter().map(|c| c as u32).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = self.field;
        let dn = d.coeffs.len() - 1;
        let inv = f.inv(d.lead()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return (UniPoly::zero(f), self.clone());
        }
        let mut q = vec![0u32; r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dn], inv);
            q[k] = c;
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = f.sub(r[k + j], f.mul(c, dc));
                }
            }
        }
        r.truncate(dn);
        (UniPoly::new(f, q), UniPoly::new(f, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = UniPoly::new(self.field, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Product of the distinct linear factors: `gcd(f, x^p − x)`.
    pub fn split_part(&self) -> Self {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return UniPoly::new(self.field, vec![1]);
        }
        let xp = UniPoly::x(self.field).pow_mod(self.field.modulus() as u64, &f);
        f.gcd(&xp.sub(&UniPoly::x(self.field)))
    }

    /// All distinct roots in F_p, sorted ascending.
    pub fn roots(&self) -> Vec<u32> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let g = self.split_part();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut out = Vec::new();
        self.split_into(g, &mut rng, &mut out);
        out.sort_unstable();
        out
    }

    fn split_into(&self, g: UniPoly, rng: &mut ChaCha8Rng, out: &mut Vec<u32>) {
        let f = self.field;
        match g.degree() {
            None | Some(0) => return,
            Some(1) => {
                out.push(f.neg(g.monic().coeffs[0]));
                return;
            }
            _ => {}
        }
        let p = f.modulus() as u64;
        if p == 2 {
            for x in 0..2 {
                if g.eval(x) == 0 {
                    out.push(x);
                }
            }
            return;
        }
        loop {
            let a = rng.gen_range(0..f.modulus());
            let shift = UniPoly::new(f, vec![a, 1]);
            let h = shift.pow_mod((p - 1) / 2, &g).sub(&UniPoly::new(f, vec![1]));
            let d = g.gcd(&h);
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap() {
                let (q, _) = g.div_rem(&d);
                self.split_into(d, rng, out);
                self.split_into(q.monic(), rng, out);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_split_and_irreducible() {
        let f = PrimeField::default();
        // (x-1)(x-5)(x+3)^2 (x^2+1)? x^2+1 splits iff p = 1 mod 4.
        let mut g = UniPoly::new(f, vec![1]);
        for r in [1i64, 5, -3, -3] {
            g = g.mul(&UniPoly::new(f, vec![f.from_i64(-r), 1]));
        }
        let mut want = vec![1, 5, f.from_i64(-3)];
        want.sort_unstable();
        assert_eq!(g.roots(), want);
        let q = PrimeField::new(7).unwrap();
        let irr = UniPoly::new(q, vec![1, 0, 1]);
        assert!(irr.roots().is_empty());
        let lin = UniPoly::new(q, vec![3, 2]);
        assert_eq!(lin.roots(), vec![2]);
    }

    #[test]
    fn division_identity() {
        let f = PrimeField::new(101).unwrap();
        let a = UniPoly::new(f, vec![3, 0, 7, 1, 9]);
        let b = UniPoly::new(f, vec![5, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).sub(&a.sub(&r)), UniPoly::zero(f));
        assert!(r.degree().unwrap_or(0) < 2);
    }
}
