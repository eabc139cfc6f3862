use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder};

/// Numerator of the Hilbert series, `HS(t) = N(t) / (1 − t)^n`.
pub fn hilbert_numerator(gens: &[Monomial], n: usize) -> Vec<i64> {
    debug_assert!(gens.iter().all(|m| (m.support_mask() >> n.min(31)) == 0 || n >= 32));
    numerator(minimalize(gens.to_vec()))
}

fn minimalize(mut g: Vec<Monomial>) -> Vec<Monomial> {
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, &y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn numerator(g: Vec<Monomial>) -> Vec<i64> {
    if g.is_empty() {
        return vec![1];
    }
    if g.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // Pairwise coprime generators: product of (1 − t^deg).
    let mut union = 0u32;
    let mut coprime = true;
    for m in &g {
        let s = m.support_mask();
        if union & s != 0 {
            coprime = false;
            break;
        }
        union |= s;
    }
    if coprime {
        let mut acc = vec![1i64];
        for m in &g {
            let mut f = vec![0i64; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // Pivot on the variable occurring in the most generators.
    let mut counts = [0usize; 32];
    for m in &g {
        for (v, c) in counts.iter_mut().enumerate() {
            if m.exp(v) > 0 {
                *c += 1;
            }
        }
    }
    let v = (0..32).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let x = Monomial::var(v);
    // N(I) = N(I + (x)) + t · N(I : x)
    let mut plus: Vec<Monomial> = g.iter().copied().filter(|m| m.exp(v) == 0).collect();
    plus.push(x);
    let colon: Vec<Monomial> = g
        .iter()
        .map(|m| if m.exp(v) > 0 { m.with_exp(v, m.exp(v) - 1) } else { *m })
        .collect();
    let mut a = numerator(minimalize(plus));
    let b = numerator(minimalize(colon));
    poly_add(&mut a, &b, 1);
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Hilbert series data of a homogeneous ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    /// Numerator over `(1 − t)^nvars`.
    pub numerator: Vec<i64>,
    /// Krull dimension of the quotient ring.
    pub krull_dim: usize,
    /// Numerator after cancelling all `(1 − t)` factors.
    pub reduced_numerator: Vec<i64>,
}

impl HilbertData {
    pub fn from_monomials(gens: &[Monomial], n: usize) -> Self {
        let num = hilbert_numerator(gens, n);
        let mut red = num.clone();
        let mut k = n;
        if red.iter().all(|&c| c == 0) {
            return HilbertData {
                nvars: n,
                numerator: num,
                krull_dim: 0,
                reduced_numerator: vec![0],
            };
        }
        while k > 0 && red.iter().sum::<i64>() == 0 {
            // divide by (1 − t): synthetic division
            let mut q = vec![0i64; red.len() - 1];
            let mut carry = 0i64;
            for i in 0..q.len() {
                carry += red[i];
                q[i] = carry;
            }
            red = q;
            k -= 1;
        }
        HilbertData {
            nvars: n,
            numerator: num,
            krull_dim: k,
            reduced_numerator: red,
        }
    }

    /// Projective dimension and degree; empty schemes give `(−1, 0)`.
    pub fn dim_degree(&self) -> (i64, u64) {
        if self.krull_dim == 0 {
            return (-1, 0);
        }
        let deg: i64 = self.reduced_numerator.iter().sum();
        (self.krull_dim as i64 - 1, deg as u64)
    }

    /// Value of the Hilbert function in degree `d`.
    pub fn hilbert_function(&self, d: u32) -> u128 {
        let n = self.nvars;
        if n == 0 {
            return u128::from(d == 0 && self.numerator.first() == Some(&1));
        }
        let mut total: i128 = 0;
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 || i as u32 > d {
                continue;
            }
            let m = (d as usize - i) as u128;
            total += c as i128 * binom(m + n as u128 - 1, n as u128 - 1) as i128;
        }
        total.max(0) as u128
    }
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Hilbert data of a homogeneous ideal from its grevlex lead terms.
pub fn hilbert_data(i: &Ideal) -> Result<HilbertData> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = i.groebner_in(&MonomialOrder::Grevlex)?;
    Ok(HilbertData::from_monomials(
        &gb.lead_monomials(),
        i.ring().nvars(),
    ))
}

/// `(projective dimension, degree)` of `V(I)`; `(−1, 0)` when empty.
pub fn hilbert_dim_degree(i: &Ideal) -> Result<(i64, u64)> {
    Ok(hilbert_data(i)?.dim_degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_point_and_plane_curves() {
        // (x0, x1) in P^2: a point.
        let g = [Monomial::var(0), Monomial::var(1)];
        assert_eq!(HilbertData::from_monomials(&g, 3).dim_degree(), (0, 1));
        // x0^3 in P^2: a cubic curve.
        let g = [Monomial::from_exps(&[3, 0, 0])];
        let h = HilbertData::from_monomials(&g, 3);
        assert_eq!(h.dim_degree(), (1, 3));
        assert_eq!(h.hilbert_function(4), 15 - 3);
        // Irrelevant ideal and unit ideal.
        let g: Vec<_> = (0..3).map(Monomial::var).collect();
        assert_eq!(HilbertData::from_monomials(&g, 3).dim_degree(), (-1, 0));
        assert_eq!(HilbertData::from_monomials(&[Monomial::one()], 3).dim_degree(), (-1, 0));
        // Zero ideal in P^2.
        assert_eq!(HilbertData::from_monomials(&[], 3).dim_degree(), (2, 1));
    }

    #[test]
    fn hilbert_function_matches_counting() {
        // (x^2, xy) in k[x,y,z]: count standard monomials directly.
        let g = [Monomial::from_exps(&[2, 0, 0]), Monomial::from_exps(&[1, 1, 0])];
        let h = HilbertData::from_monomials(&g, 3);
        for d in 0..7u32 {
            let mut count = 0;
            for a in 0..=d {
                for b in 0..=d - a {
                    let m = Monomial::from_exps(&[a, b, d - a - b]);
                    if !g.iter().any(|x| x.divides(&m)) {
                        count += 1;
                    }
                }
            }
            assert_eq!(h.hilbert_function(d), count, "degree {d}");
        }
    }
}
