//! Points, linear subspaces and the tetrahedron configuration.

use projgeom::groebner::Ideal;
use projgeom::modfield::{FMatrix, PrimeField};
use projgeom::polyring::{MonomialOrder, Polynomial, Ring, RingDescriptor};
use projgeom::varmap::{ProjectivePoint, RationalMap};
use projgeom::{Error, Result};

/// Genericity preconditions are retried this many times before erroring.
pub const RESAMPLE_LIMIT: usize = 8;

/// The point `p = [1:1:1:-1]`.
pub fn point_p(field: PrimeField) -> Result<ProjectivePoint> {
    ProjectivePoint::from_i64(field, &[1, 1, 1, -1])
}

/// Coordinate vertex `v_i`.
pub fn vertex(field: PrimeField, n: usize, i: usize) -> Result<ProjectivePoint> {
    let mut c = vec![0u32; n];
    c[i] = 1;
    ProjectivePoint::new(field, &c)
}

/// Linear forms vanishing on the span of `points`.
pub fn span_ideal(ring: &Ring, points: &[&[u32]]) -> Result<Ideal> {
    let n = ring.nvars();
    let mut data = Vec::with_capacity(points.len() * n);
    for p in points {
        if p.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: p.len(),
            });
        }
        data.extend_from_slice(p);
    }
    let m = FMatrix::from_rows(ring.field(), points.len(), n, data)?;
    let forms = m
        .kernel_basis()
        .into_iter()
        .map(|k| linear_form(ring, &k))
        .collect();
    Ok(Ideal::new(ring, forms))
}

pub fn linear_form(ring: &Ring, coeffs: &[u32]) -> Polynomial {
    let mut f = Polynomial::zero(ring);
    for (v, &c) in coeffs.iter().enumerate() {
        f = f.add_scaled(&Polynomial::var(ring, v), c);
    }
    f
}

/// `P^{k-1} → span(points)`, `u ↦ Σ u_i points_i`, with source variables
/// `stem_0, ...`.
pub fn linear_parametrization(target: &Ring, points: &[&[u32]], stem: &str) -> Result<RationalMap> {
    let field = target.field();
    let src = RingDescriptor::indexed(field, stem, points.len(), MonomialOrder::Grevlex)?;
    let forms = (0..target.nvars())
        .map(|v| {
            let coeffs: Vec<u32> = points.iter().map(|p| p[v]).collect();
            linear_form(&src, &coeffs)
        })
        .collect();
    RationalMap::new(&src, target, forms)
}

/// The six edges `s_i = s_j = 0` of the coordinate tetrahedron, named `ij`.
pub fn edges(ring: &Ring) -> Vec<(String, Ideal)> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let id = Ideal::new(ring, vec![Polynomial::var(ring, i), Polynomial::var(ring, j)]);
            out.push((format!("{i}{j}"), id));
        }
    }
    out
}
