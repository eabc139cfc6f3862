use super::ideal::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingDescriptor, RingMap};

/// Tangent cone of `I` at `point`.
///
/// For a homogeneous `I` and a nonzero point the computation happens in the
/// affine chart of the point's last nonzero coordinate `c`: `x_c` is set to
/// 1 and the other variables are translated so the point becomes the origin.
/// The result lives in the same ring and does not involve `x_c`. Otherwise
/// `point` is an affine point and only the translation is applied.
pub fn tangent_cone(i: &Ideal, point: &[u32]) -> Result<Ideal> {
    let n = i.ring().nvars();
    if point.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: point.len(),
        });
    }
    if i.is_homogeneous() && point.iter().any(|&c| c != 0) {
        tangent_cone_projective(i, point)
    } else {
        tangent_cone_affine(i, point)
    }
}

/// Tangent cone at a projective point, in the chart of its last nonzero
/// coordinate.
pub fn tangent_cone_projective(i: &Ideal, point: &[u32]) -> Result<Ideal> {
    let ring = i.ring();
    let f = ring.field();
    let c = point
        .iter()
        .rposition(|&v| v != 0)
        .ok_or(Error::OutOfRange("zero projective point".into()))?;
    let inv = f.inv(point[c])?;
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|v| {
            if v == c {
                Polynomial::one(ring)
            } else {
                Polynomial::var(ring, v)
                    .add_scaled(&Polynomial::one(ring), f.mul(point[v], inv))
            }
        })
        .collect();
    let mut map = RingMap::new(images, ring);
    let moved = Ideal::new(ring, i.gens().iter().map(|g| map.apply(g)).collect());
    cone_at_origin(&moved)
}

/// Tangent cone at an affine point.
pub fn tangent_cone_affine(i: &Ideal, point: &[u32]) -> Result<Ideal> {
    let ring = i.ring();
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|v| Polynomial::var(ring, v).add_scaled(&Polynomial::one(ring), point[v]))
        .collect();
    let mut map = RingMap::new(images, ring);
    let moved = Ideal::new(ring, i.gens().iter().map(|g| map.apply(g)).collect());
    cone_at_origin(&moved)
}

/// Ideal of lowest forms of an ideal through the origin.
///
/// Homogenize with `h`, take a basis for a graded order in which larger
/// powers of `h` win ties, set `h = 1` and keep lowest forms.
pub fn cone_at_origin(i: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    let origin = vec![0u32; ring.nvars()];
    for g in i.gens() {
        if g.eval(&origin) != 0 {
            return Err(Error::PointNotOnVariety);
        }
    }
    if i.gens().len() <= 1 {
        let gens = i.gens().iter().map(|g| g.lowest_form()).collect::<Result<_>>()?;
        return Ok(Ideal::new(ring, gens));
    }
    let n = ring.nvars();
    let names = std::iter::once(ring.fresh_name("h")).chain(ring.vars().iter().cloned());
    let hr = RingDescriptor::new(ring.field(), names, MonomialOrder::WeightedGraded(vec![1; n + 1]))?;
    let shift: Vec<usize> = (1..=n).collect();
    let homog: Vec<Polynomial> = i
        .gens()
        .iter()
        .map(|g| {
            let d = g.degree().unwrap();
            let terms = g
                .terms()
                .iter()
                .map(|&(m, c)| {
                    let mm = m.permuted(&shift);
                    (mm.mul(&Monomial::var(0).with_exp(0, d - m.degree())), c)
                })
                .collect();
            Polynomial::from_terms(&hr, terms)
        })
        .collect();
    let gb = GroebnerBasis::compute(&hr, &homog);
    let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
    let mut gens = Vec::with_capacity(gb.len());
    for g in gb.elements() {
        // h = 1, then back to the original variables
        let terms = g
            .terms()
            .iter()
            .map(|&(m, c)| (m.with_exp(0, 0).permuted(&back), c))
            .collect();
        let d = Polynomial::from_terms(ring, terms);
        if !d.is_zero() {
            gens.push(d.lowest_form()?);
        }
    }
    Ok(Ideal::new(ring, gens))
}
