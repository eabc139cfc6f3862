use super::point::ProjectivePoint;
use crate::error::{Error, Result};
use crate::groebner::{saturate_irrelevant, tangent_cone_projective, Ideal};
use crate::modfield::FMatrix;
use crate::polyring::{jacobian_minors, Monomial, MonomialOrder, Polynomial, RingMap};

/// `X + (codim × codim minors of the jacobian)`, saturated by the
/// irrelevant ideal; `dim` is the projective dimension of `X`.
pub fn singular_locus(x: &Ideal, dim: usize) -> Result<Ideal> {
    let n = x.ring().nvars();
    if dim + 1 >= n {
        return Err(Error::OutOfRange(format!("dimension {dim} in a ring of {n} variables")));
    }
    let codim = n - 1 - dim;
    let minors = jacobian_minors(x.gens(), codim)?;
    let s = x.sum(&minors)?;
    Ok(saturate_irrelevant(&s)?.reduced())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeType {
    Smooth,
    /// Plane curve point with two distinct tangents.
    Node,
    /// Surface point whose tangent cone is a rank-3 quadric cone.
    QuadricConeNode,
    Other,
}

impl NodeType {
    pub fn token(&self) -> &'static str {
        match self {
            NodeType::Smooth => "smooth",
            NodeType::Node => "node",
            NodeType::QuadricConeNode => "quadric-cone-node",
            NodeType::Other => "other",
        }
    }
}

/// Classifies `x ∈ V(X)` by its tangent cone.
///
/// The cone is computed in the affine chart of the last nonzero coordinate.
/// Its linear forms are eliminated by substitution; what remains lives in
/// `r` variables. A linear cone is smooth. A single quadric of full rank is
/// a node for `r = 2` and a quadric cone for `r = 3`. Everything else is
/// reported as other.
pub fn node_type(x: &Ideal, pt: &ProjectivePoint) -> Result<NodeType> {
    let ring = x.ring();
    if pt.coords().len() != ring.nvars() || pt.field() != ring.field() {
        return Err(Error::RingMismatch);
    }
    if x.gens().iter().any(|g| g.eval(pt.coords()) != 0) {
        return Err(Error::PointNotOnVariety);
    }
    let chart = pt.chart();
    let tc = tangent_cone_projective(x, pt.coords())?;
    let cone = Ideal::new(ring, tc.groebner_in(&MonomialOrder::Grevlex)?.elements().to_vec());
    if cone.is_unit() {
        return Err(Error::PointNotOnVariety);
    }
    let n = ring.nvars();
    let mut images: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(ring, v)).collect();
    let mut eliminated = vec![false; n];
    eliminated[chart] = true;
    let mut rest = Vec::new();
    for g in cone.gens() {
        if g.degree() == Some(1) {
            // reduced basis: the lead variable occurs in no other element
            let lead = g.lead_monomial().unwrap();
            let v = (0..n).find(|&v| lead.exp(v) == 1).unwrap();
            let inv = ring.field().inv(g.lead_coeff())?;
            let tail = Polynomial::var(ring, v).add_scaled(g, ring.field().neg(inv));
            images[v] = tail;
            eliminated[v] = true;
        } else {
            rest.push(g.clone());
        }
    }
    let mut sub = RingMap::new(images, ring);
    let rest: Vec<Polynomial> = rest
        .iter()
        .map(|g| sub.apply(g))
        .filter(|g| !g.is_zero())
        .collect();
    let residual = Ideal::new(ring, rest).reduced();
    let vars: Vec<usize> = (0..n).filter(|&v| !eliminated[v]).collect();
    let r = vars.len();
    match residual.gens() {
        [] => Ok(NodeType::Smooth),
        [q] if q.degree() == Some(2) && q.is_homogeneous() => {
            let rank = quadric_rank(q, &vars)?;
            Ok(match (r, rank) {
                (2, 2) => NodeType::Node,
                (3, 3) => NodeType::QuadricConeNode,
                _ => NodeType::Other,
            })
        }
        _ => Ok(NodeType::Other),
    }
}

/// Rank of the symmetric matrix of a quadratic form in the listed variables.
pub fn quadric_rank(q: &Polynomial, vars: &[usize]) -> Result<usize> {
    let field = q.field();
    if field.modulus() == 2 {
        return Err(Error::Unsupported("quadratic forms in characteristic 2".into()));
    }
    let half = field.inv(2)?;
    let r = vars.len();
    let mut m = FMatrix::zeros(field, r, r);
    for (a, &va) in vars.iter().enumerate() {
        for (b, &vb) in vars.iter().enumerate() {
            let mono = Monomial::var(va).mul(&Monomial::var(vb));
            let c = q.coeff(&mono);
            m.set(a, b, if a == b { c } else { field.mul(c, half) });
        }
    }
    let covered: u32 = vars.iter().map(|&v| 1u32 << v).sum();
    if q.support_mask() & !covered != 0 {
        return Err(Error::OutOfRange("quadric involves other variables".into()));
    }
    Ok(m.rank())
}

