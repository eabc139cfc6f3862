use super::map::RationalMap;
use crate::modfield::{FMatrix, PrimeField};
use crate::polyring::{Monomial, Polynomial, Ring};

/// All monomials of degree `d` in `n` variables, descending in the ring order.
pub fn monomials_of_degree(ring: &Ring, d: u32) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn go(v: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v + 1 == e.len() {
            e[v] = left;
            out.push(Monomial::from_exps(e));
            e[v] = 0;
            return;
        }
        for k in (0..=left).rev() {
            e[v] = k;
            go(v + 1, left - k, e, out);
        }
        e[v] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    go(0, d, &mut e, &mut out);
    let order = ring.order().clone();
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// Values of `monos` at `x`.
pub fn eval_monomials(field: PrimeField, monos: &[Monomial], x: &[u32]) -> Vec<u32> {
    let maxd = monos.iter().map(|m| m.degree()).max().unwrap_or(0) as usize;
    let pw: Vec<Vec<u32>> = x
        .iter()
        .map(|&a| {
            let mut v = Vec::with_capacity(maxd + 1);
            let mut acc = 1;
            for _ in 0..=maxd {
                v.push(acc);
                acc = field.mul(acc, a);
            }
            v
        })
        .collect();
    monos
        .iter()
        .map(|m| {
            let mut acc = 1;
            for (v, p) in pw.iter().enumerate() {
                let e = m.exp(v) as usize;
                if e > 0 {
                    acc = field.mul(acc, p[e]);
                }
            }
            acc
        })
        .collect()
}

/// Polynomial with the given coefficients on `monos`.
pub fn poly_from_coeffs(ring: &Ring, monos: &[Monomial], coeffs: &[u32]) -> Polynomial {
    let terms = monos
        .iter()
        .zip(coeffs)
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| (*m, c))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Rank of the jacobian of `forms` at `x`.
pub fn jacobian_rank_at(forms: &[Polynomial], x: &[u32]) -> usize {
    let Some(first) = forms.first() else {
        return 0;
    };
    let ring = first.ring();
    let n = ring.nvars();
    let mut data = Vec::with_capacity(forms.len() * n);
    for f in forms {
        for v in 0..n {
            data.push(f.derivative(v).eval(x));
        }
    }
    FMatrix::from_rows(ring.field(), forms.len(), n, data)
        .expect("shape")
        .rank()
}

/// Projective dimension of the image of `phi` from the jacobian rank at a
/// random point of the root parametrization.
pub fn image_dimension(phi: &RationalMap, rng: &mut rand_chacha::ChaCha8Rng) -> crate::Result<i64> {
    let (root, forms) = phi.forms_on_root()?;
    let x = super::sample::random_coords(rng, root.field(), root.nvars());
    Ok(jacobian_rank_at(&forms, &x) as i64 - 1)
}

/// Incremental echelon form for independence tests.
pub struct Echelon {
    field: PrimeField,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon { field, rows: Vec::new() }
    }

    /// Reduces `v`; if independent, stores it and returns true.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let f = self.field;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &y) in v.iter_mut().zip(row) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(neg, y));
                    }
                }
            }
        }
        let Some(pc) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(v[pc]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.rows.push((pc, v));
        true
    }
}

