use super::map::RationalMap;
use super::point::ProjectivePoint;
use super::sample::{rng_for, sample_source_and_image};
use crate::error::{Error, Result};
use crate::groebner::{hilbert_dim_degree, saturate_irrelevant, saturate_poly, Ideal};
use crate::polyring::{same_ring, Polynomial};

/// Fresh source points tried before giving up on a zero-dimensional fiber.
pub const FIBER_RETRIES: usize = 8;

/// `(forms) + I_X` saturated by the irrelevant ideal.
pub fn base_locus(phi: &RationalMap) -> Result<Ideal> {
    let mut b = phi.forms_ideal();
    if let Some(i) = phi.source_ideal() {
        b = b.sum(i)?;
    }
    saturate_irrelevant(&b)
}

/// Outcome of checking candidate components against a base locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseLocusCertificate {
    /// Per candidate: every form reduces to zero modulo it.
    pub contains: Vec<bool>,
    /// Projective dimension of what is left after saturating by all
    /// candidates (−1 for nothing left).
    pub residual_dim: i64,
}

impl BaseLocusCertificate {
    pub fn holds(&self) -> bool {
        self.contains.iter().all(|&c| c) && self.residual_dim <= 0
    }
}

/// Checks that each candidate contains the base locus and that saturating
/// by their product leaves at most finitely many points.
///
/// Saturation by a product is done one factor at a time, which gives the
/// same ideal.
pub fn certify_base_locus(phi: &RationalMap, candidates: &[Ideal]) -> Result<BaseLocusCertificate> {
    let mut b = phi.forms_ideal();
    if let Some(i) = phi.source_ideal() {
        b = b.sum(i)?;
    }
    let mut contains = Vec::with_capacity(candidates.len());
    for c in candidates {
        if !same_ring(c.ring(), phi.source()) {
            return Err(Error::RingMismatch);
        }
        let gb = c.groebner();
        let mut ok = true;
        for g in b.gens() {
            if !gb.normal_form(g)?.is_zero() {
                ok = false;
                break;
            }
        }
        contains.push(ok);
    }
    let mut residual = b;
    for c in candidates {
        residual = crate::groebner::saturate(&residual, c)?;
    }
    let residual_dim = hilbert_dim_degree(&residual)?.0;
    Ok(BaseLocusCertificate {
        contains,
        residual_dim,
    })
}

/// Ideal of `φ⁻¹(y)` away from the base locus.
///
/// With `y_k ≠ 0` the 2×2 minors are generated by `y_k f_j − y_j f_k`.
/// On their zero set, `f_k = 0` forces every `f_j = 0`, so saturating by
/// the single form `f_k` removes exactly the base-locus components and
/// equals saturation by the base-locus ideal.
pub fn fiber(phi: &RationalMap, y: &ProjectivePoint) -> Result<Ideal> {
    let tgt = phi.target();
    if y.dim() + 1 != tgt.nvars() || y.field() != tgt.field() {
        return Err(Error::RingMismatch);
    }
    let field = tgt.field();
    let yc = y.coords();
    let k = yc.iter().position(|&c| c != 0).expect("canonical point");
    let forms = phi.forms();
    let mut gens: Vec<Polynomial> = Vec::new();
    for j in (0..forms.len()).filter(|&j| j != k) {
        let g = forms[j].scale(yc[k]).add_scaled(&forms[k], field.neg(yc[j]));
        gens.push(g);
    }
    let mut i = Ideal::new(phi.source(), gens);
    if let Some(x) = phi.source_ideal() {
        i = i.sum(x)?;
    }
    if forms[k].is_zero() {
        return Ok(Ideal::unit(phi.source()));
    }
    let sat = saturate_poly(&i, &forms[k])?;
    Ok(sat.reduced())
}

/// Degree of a general fiber, from a seeded-random source point.
pub fn map_degree(phi: &RationalMap) -> Result<u64> {
    map_degree_seeded(phi, 0)
}

pub fn map_degree_seeded(phi: &RationalMap, seed: u64) -> Result<u64> {
    let mut rng = rng_for(seed, 3);
    for _ in 0..FIBER_RETRIES {
        let (_, y) = sample_source_and_image(phi, 1, &mut rng)?.pop().unwrap();
        let f = fiber(phi, &y)?;
        let (dim, deg) = hilbert_dim_degree(&f)?;
        if dim == 0 {
            return Ok(deg);
        }
    }
    Err(Error::NoFiniteFiber(FIBER_RETRIES))
}
