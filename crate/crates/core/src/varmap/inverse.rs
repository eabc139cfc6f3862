use super::image::{image_seeded, ImageStrategy};
use super::map::RationalMap;
use super::sample::{rng_for, sample_source_and_image};
use super::util::{eval_monomials, monomials_of_degree, poly_from_coeffs};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modfield::FMatrix;
use crate::polyring::{Monomial, Polynomial};

/// Degree bound used when the target ideal has to be computed first.
pub const IMAGE_DEGREE_BOUND: u32 = 6;

const OVERSAMPLE: usize = 20;

/// Inverse of a birational map onto its image, by interpolation in
/// increasing degree.
///
/// The candidate forms live on the standard monomials of the image ideal,
/// so vanishing on the image means vanishing identically. The first
/// nonzero solution is accepted only if it passes the exact identity
/// `h_j(φ(x))·x_k − h_k(φ(x))·x_j ≡ 0` on the source.
pub fn inverse_map(phi: &RationalMap, max_degree: u32) -> Result<RationalMap> {
    inverse_map_seeded(phi, None, max_degree, 0)
}

/// As [`inverse_map`], optionally with the image ideal already known.
pub fn inverse_map_seeded(
    phi: &RationalMap,
    image_ideal: Option<&Ideal>,
    max_degree: u32,
    seed: u64,
) -> Result<RationalMap> {
    let y_ideal = match image_ideal {
        Some(i) => i.clone(),
        None => image_seeded(phi, ImageStrategy::Auto, IMAGE_DEGREE_BOUND, seed)?,
    };
    let tgt = phi.target().clone();
    let src = phi.source().clone();
    let field = tgt.field();
    let gb = y_ideal.groebner();
    let leads = gb.lead_monomials();
    let nsrc = src.nvars();
    let mut rng = rng_for(seed, 4);
    let mut samples: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for e in 1..=max_degree {
        let basis: Vec<Monomial> = monomials_of_degree(&tgt, e)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect();
        let nb = basis.len();
        let unknowns = nb * nsrc;
        let eq_per_sample = nsrc.saturating_sub(1).max(1);
        let need = (unknowns + OVERSAMPLE).div_ceil(eq_per_sample);
        while samples.len() < need {
            let (x, y) = sample_source_and_image(phi, 1, &mut rng)?.pop().unwrap();
            samples.push((x.coords().to_vec(), y.coords().to_vec()));
        }
        let mut data = Vec::with_capacity(need * eq_per_sample * unknowns);
        let mut rows = 0;
        for (x, y) in &samples[..need] {
            let vals = eval_monomials(field, &basis, y);
            let k = x.iter().position(|&c| c != 0).unwrap();
            for j in (0..nsrc).filter(|&j| j != k) {
                let mut row = vec![0u32; unknowns];
                for (m, &v) in vals.iter().enumerate() {
                    row[j * nb + m] = field.mul(v, x[k]);
                    row[k * nb + m] = field.neg(field.mul(v, x[j]));
                }
                data.extend(row);
                rows += 1;
            }
        }
        let kernel = FMatrix::from_rows(field, rows, unknowns, data)?.kernel_basis();
        if let Some(v) = kernel.first() {
            let forms: Vec<Polynomial> = (0..nsrc)
                .map(|j| poly_from_coeffs(&tgt, &basis, &v[j * nb..(j + 1) * nb]))
                .collect();
            let h = RationalMap::new(&tgt, &src, forms)?;
            let h = if y_ideal.is_zero() {
                h
            } else {
                h.restrict(&y_ideal)?
            };
            let h = h.with_parametrization(phi)?;
            if inverse_identity_holds(phi, &h)? {
                return Ok(h);
            }
            return Err(Error::CertificateFailed(format!(
                "degree {e} inverse candidate fails the exact identity"
            )));
        }
    }
    Err(Error::Inconclusive {
        last_degree: max_degree,
    })
}

/// Exact check that `h ∘ φ` is the identity on the source of `φ`.
pub fn inverse_identity_holds(phi: &RationalMap, h: &RationalMap) -> Result<bool> {
    let comp = phi.then(h)?;
    // The source coordinates and the composite, as polynomials on the root.
    let (_, xs) = match phi.parametrization() {
        Some(p) => p.forms_on_root()?,
        None => (
            phi.source().clone(),
            (0..phi.source().nvars())
                .map(|v| Polynomial::var(phi.source(), v))
                .collect(),
        ),
    };
    let (_, hs) = comp.forms_on_root()?;
    let reduce = |f: Polynomial| -> Result<Polynomial> {
        match (phi.parametrization(), phi.source_ideal()) {
            (None, Some(i)) => i.reduce(&f),
            _ => Ok(f),
        }
    };
    let n = xs.len();
    let prime_root = phi.parametrization().is_some() || phi.source_ideal().is_none();
    if prime_root {
        // The root ring is a domain: comparing against one nonzero
        // coordinate suffices.
        let Some(k) = xs.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        for j in 0..n {
            if j != k && !(&hs[j] * &xs[k] - &hs[k] * &xs[j]).is_zero() {
                return Ok(false);
            }
        }
        return Ok(!hs[k].is_zero());
    }
    for j in 0..n {
        for k in j + 1..n {
            if !reduce(&hs[j] * &xs[k] - &hs[k] * &xs[j])?.is_zero() {
                return Ok(false);
            }
        }
    }
    let mut nonzero = false;
    for f in &hs {
        if !reduce(f.clone())?.is_zero() {
            nonzero = true;
        }
    }
    Ok(nonzero)
}

/// Checks `h(φ(x)) = x` and `φ(h(φ(x))) = φ(x)` on `n` seeded samples.
pub fn inverse_fixes_samples(phi: &RationalMap, h: &RationalMap, n: usize, seed: u64) -> Result<bool> {
    let mut rng = rng_for(seed, 5);
    let pts = sample_source_and_image(phi, n, &mut rng)?;
    let field = phi.source().field();
    for (x, y) in pts {
        let back = h.eval_raw(y.coords());
        if back.iter().all(|&c| c == 0) {
            continue;
        }
        let bx = super::point::ProjectivePoint::new(field, &back)?;
        if bx != x {
            return Ok(false);
        }
        let again = phi.eval_raw(bx.coords());
        if super::point::ProjectivePoint::new(field, &again)? != y {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether two maps with the same source agree as rational maps: all
/// `f_j g_k − f_k g_j` vanish on the source.
pub fn same_rational_map(a: &RationalMap, b: &RationalMap) -> Result<bool> {
    if a.forms().len() != b.forms().len() {
        return Ok(false);
    }
    let n = a.forms().len();
    let ideal = a.source_ideal().or(b.source_ideal()).cloned();
    for j in 0..n {
        for k in j + 1..n {
            let m = &a.forms()[j] * &b.forms()[k] - &a.forms()[k] * &b.forms()[j];
            let zero = match &ideal {
                Some(i) => i.reduce(&m)?.is_zero(),
                None => m.is_zero(),
            };
            if !zero {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Scalar `c` with `b = c·a` coefficientwise, if one exists.
pub fn proportional_forms(a: &[Polynomial], b: &[Polynomial]) -> Option<u32> {
    if a.len() != b.len() {
        return None;
    }
    let field = a.first()?.field();
    let mut c: Option<u32> = None;
    for (f, g) in a.iter().zip(b) {
        if f.len() != g.len() {
            return None;
        }
        for (&(m1, c1), &(m2, c2)) in f.terms().iter().zip(g.terms()) {
            if m1 != m2 {
                return None;
            }
            let r = field.mul(c2, field.inv(c1).ok()?);
            match c {
                None => c = Some(r),
                Some(x) if x != r => return None,
                _ => {}
            }
        }
    }
    c
}
