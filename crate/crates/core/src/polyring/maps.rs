use std::collections::HashMap;

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::{same_ring, Ring};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Substitutes `images[i]` for variable `i` of `f`'s ring.
pub fn apply_ring_map(images: &[Polynomial], f: &Polynomial) -> Result<Polynomial> {
    let n = f.ring().nvars();
    if images.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: images.len(),
        });
    }
    let Some(target) = images.first().map(|g| g.ring().clone()) else {
        // Zero-variable source: f is a constant.
        return Err(Error::Unsupported("ring map from a ring without variables".into()));
    };
    if images.iter().any(|g| !same_ring(g.ring(), &target)) {
        return Err(Error::RingMismatch);
    }
    Ok(RingMap::new(images.to_vec(), &target).apply(f))
}

/// A substitution with cached powers of the images.
pub struct RingMap {
    target: Ring,
    images: Vec<Polynomial>,
    powers: Vec<Vec<Polynomial>>,
}

impl RingMap {
    pub fn new(images: Vec<Polynomial>, target: &Ring) -> Self {
        let n = images.len();
        RingMap {
            target: target.clone(),
            images,
            powers: vec![Vec::new(); n],
        }
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    fn power(&mut self, v: usize, e: usize) -> &Polynomial {
        let pw = &mut self.powers[v];
        if pw.is_empty() {
            pw.push(Polynomial::one(&self.target));
        }
        while pw.len() <= e {
            let next = pw.last().unwrap() * &self.images[v];
            pw.push(next);
        }
        &self.powers[v][e]
    }

    pub fn apply(&mut self, f: &Polynomial) -> Polynomial {
        let field = self.target.field();
        let p = field.modulus() as u64;
        let n = self.images.len();
        let mut acc: HashMap<Monomial, u64> = HashMap::new();
        for &(m, c) in f.terms() {
            let mut t = Polynomial::constant(&self.target, c);
            for v in 0..n {
                let e = m.exp(v) as usize;
                if e > 0 {
                    t = &t * self.power(v, e);
                }
            }
            for &(tm, tc) in t.terms() {
                let slot = acc.entry(tm).or_insert(0);
                *slot = (*slot + tc as u64) % p;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (m, c as u32))
            .collect();
        Polynomial::from_terms(&self.target, terms)
    }

    /// Images of `self` composed after `inner`: `x_i ↦ inner(images_i)`.
    pub fn compose_after(&self, inner: &mut RingMap) -> RingMap {
        let imgs = self.images.iter().map(|g| inner.apply(g)).collect();
        RingMap::new(imgs, &inner.target.clone())
    }
}

/// Matrix of partial derivatives, one row per generator.
pub fn jacobian(gens: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    gens.iter()
        .map(|g| (0..g.ring().nvars()).map(|v| g.derivative(v)).collect())
        .collect()
}

fn det(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let ring = m[rows[0]][cols[0]].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    let sub_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det(m, sub_rows, &sub_cols);
        let term = entry * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// All nonzero `k × k` minors of a polynomial matrix.
pub fn minors(m: &[Vec<Polynomial>], k: usize) -> Result<Vec<Polynomial>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if k == 0 || k > rows.min(cols) {
        return Err(Error::OutOfRange(format!("minor size {k}")));
    }
    let mut out = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let d = det(m, &rs, &cs);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Ideal of the `k × k` minors of the jacobian of `gens`.
pub fn jacobian_minors(gens: &[Polynomial], k: usize) -> Result<Ideal> {
    let ring = gens.first().ok_or(Error::OutOfRange("empty generator list".into()))?.ring().clone();
    Ok(Ideal::new(&ring, minors(&jacobian(gens), k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modfield::PrimeField;
    use crate::polyring::{MonomialOrder, RingDescriptor};

    fn xyz() -> Ring {
        RingDescriptor::new(PrimeField::default(), ["x", "y", "z"], MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn identity_map_is_noop() {
        let r = xyz();
        let f = Polynomial::parse("x^2*y - 3*z + 1", &r).unwrap();
        let ids: Vec<_> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        assert_eq!(apply_ring_map(&ids, &f).unwrap(), f);
        assert!(apply_ring_map(&ids[..2], &f).is_err());
    }

    #[test]
    fn gradient_minors() {
        let r = xyz();
        let f = Polynomial::parse("x^2+y^2+z^2", &r).unwrap();
        let i = jacobian_minors(&[f], 1).unwrap();
        let want: Vec<_> = ["2*x", "2*y", "2*z"]
            .iter()
            .map(|s| Polynomial::parse(s, &r).unwrap())
            .collect();
        assert_eq!(i.gens(), &want[..]);
        let g = [Polynomial::parse("x", &r).unwrap(), Polynomial::parse("y", &r).unwrap()];
        let d = jacobian_minors(&g, 2).unwrap();
        assert_eq!(d.gens(), &[Polynomial::one(&r), ][..]);
        assert!(jacobian_minors(&g, 3).is_err());
    }
}
