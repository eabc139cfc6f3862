use super::hilbert::hilbert_dim_degree;
use super::ideal::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial, Ring, RingDescriptor, RingMap, UniPoly};

/// F_p-points of a zero-dimensional projective scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoints {
    /// Canonical coordinates (first nonzero entry 1), sorted.
    pub points: Vec<Vec<u32>>,
    /// Total degree of eliminant factors without roots in F_p.
    pub unresolved_degree: usize,
}

/// Rational points of `V(I)` for homogeneous `I` with `dim V(I) ≤ 0`.
pub fn rational_points_zero_dim(i: &Ideal) -> Result<RationalPoints> {
    let (dim, _) = hilbert_dim_degree(i)?;
    if dim > 0 {
        return Err(Error::PositiveDimensional);
    }
    let ring = i.ring();
    let n = ring.nvars();
    let mut out = RationalPoints {
        points: Vec::new(),
        unresolved_degree: 0,
    };
    if dim < 0 {
        return Ok(out);
    }
    // Chart k: x_0 = .. = x_{k-1} = 0, x_k = 1.
    for k in 0..n {
        let rest = n - k - 1;
        let names: Vec<String> = ring.vars()[k + 1..].to_vec();
        let images: Vec<Polynomial>;
        let chart: Ring;
        if rest == 0 {
            // Only the coordinate point e_k remains.
            let pt: Vec<u32> = (0..n).map(|v| u32::from(v == k)).collect();
            if i.gens().iter().all(|g| g.eval(&pt) == 0) {
                out.points.push(pt);
            }
            continue;
        }
        chart = RingDescriptor::new(ring.field(), names, MonomialOrder::Lex)?;
        images = (0..n)
            .map(|v| {
                if v < k {
                    Polynomial::zero(&chart)
                } else if v == k {
                    Polynomial::one(&chart)
                } else {
                    Polynomial::var(&chart, v - k - 1)
                }
            })
            .collect();
        let mut map = RingMap::new(images, &chart);
        let gens: Vec<Polynomial> = i.gens().iter().map(|g| map.apply(g)).collect();
        let mut sols = Vec::new();
        out.unresolved_degree += solve_affine(&chart, gens, &mut Vec::new(), &mut sols)?;
        for s in sols {
            let mut pt = vec![0u32; n];
            pt[k] = 1;
            pt[k + 1..].copy_from_slice(&s);
            out.points.push(pt);
        }
    }
    out.points.sort();
    Ok(out)
}

/// Solves a zero-dimensional affine system by lex bases and back-substitution
/// on the last variable. `prefix` holds values of already fixed trailing
/// variables. Returns the unresolved degree.
fn solve_affine(
    ring: &Ring,
    gens: Vec<Polynomial>,
    fixed: &mut Vec<u32>,
    sols: &mut Vec<Vec<u32>>,
) -> Result<usize> {
    let gb = GroebnerBasis::compute(ring, &gens);
    if gb.is_unit() {
        return Ok(0);
    }
    let m = ring.nvars();
    if m == 0 {
        sols.push(fixed.iter().rev().copied().collect());
        return Ok(0);
    }
    let last = m - 1;
    let leads = gb.lead_monomials();
    for v in 0..m {
        let pure = leads.iter().any(|l| l.degree() == l.exp(v) && l.exp(v) > 0);
        if !pure {
            return Err(Error::PositiveDimensional);
        }
    }
    // Under lex the eliminant in the last variable is the first element.
    let field = ring.field();
    let elim = gb
        .elements()
        .iter()
        .find(|g| g.terms().iter().all(|t| t.0.degree() == t.0.exp(last)))
        .ok_or(Error::PositiveDimensional)?;
    let mut coeffs = vec![0u32; elim.degree().unwrap() as usize + 1];
    for &(mo, c) in elim.terms() {
        coeffs[mo.exp(last) as usize] = c;
    }
    let u = UniPoly::new(field, coeffs);
    let split = u.split_part();
    let sqfree = u.squarefree_part();
    let mut unresolved = sqfree.degree().unwrap_or(0) - split.degree().unwrap_or(0);
    let names: Vec<String> = ring.vars()[..last].to_vec();
    let sub = RingDescriptor::new(field, names, MonomialOrder::Lex)?;
    for r in u.roots() {
        let images: Vec<Polynomial> = (0..m)
            .map(|v| {
                if v == last {
                    Polynomial::constant(&sub, r)
                } else {
                    Polynomial::var(&sub, v)
                }
            })
            .collect();
        let mut map = RingMap::new(images, &sub);
        let reduced: Vec<Polynomial> = gb.elements().iter().map(|g| map.apply(g)).collect();
        if last == 0 {
            if reduced.iter().all(|g| g.is_zero()) {
                fixed.push(r);
                sols.push(fixed.iter().rev().copied().collect());
                fixed.pop();
            }
            continue;
        }
        fixed.push(r);
        unresolved += solve_affine(&sub, reduced, fixed, sols)?;
        fixed.pop();
    }
    Ok(unresolved)
}

