use std::collections::BTreeMap;

use super::point::ProjectivePoint;
use super::util::monomials_of_degree;
use crate::error::{Error, Result};
use crate::modfield::FMatrix;
use crate::polyring::{Monomial, MonomialOrder, ParametricFamily, Polynomial, RingDescriptor, RingMap};

/// Condition matrix for multiplicity `m` at `x`: one row per monomial of
/// degree `< m` in the chart variables, one column per family parameter.
///
/// The chart is the last nonzero coordinate `c` of `x`; members are
/// translated by `x_v ↦ x_v + x_v(pt)/x_c(pt)`, `x_c ↦ 1`, so that the
/// rows are the Taylor coefficients at the point.
pub fn condition_matrix(fam: &ParametricFamily, x: &ProjectivePoint, m: u32) -> Result<FMatrix> {
    let ring = fam.geom_ring();
    if m == 0 {
        return Err(Error::OutOfRange("multiplicity 0".into()));
    }
    if x.coords().len() != ring.nvars() || x.field() != ring.field() {
        return Err(Error::RingMismatch);
    }
    let field = ring.field();
    let c = x.chart();
    let inv = field.inv(x.coords()[c])?;
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|v| {
            if v == c {
                Polynomial::one(ring)
            } else {
                Polynomial::var(ring, v)
                    .add_scaled(&Polynomial::one(ring), field.mul(x.coords()[v], inv))
            }
        })
        .collect();
    let mut sub = RingMap::new(images, ring);
    // Rows keyed by the raw exponent vector for a stable order.
    let mut rows: BTreeMap<[u8; crate::polyring::MAX_VARS], Vec<u32>> = BTreeMap::new();
    let np = fam.nparams();
    for d in 0..m {
        for mono in monomials_of_degree(ring, d) {
            if mono.exp(c) == 0 {
                rows.insert(*mono.raw(), vec![0; np]);
            }
        }
    }
    for (j, member) in fam.members().iter().enumerate() {
        let t = sub.apply(member);
        for &(mono, coef) in t.terms() {
            if mono.degree() < m {
                if let Some(r) = rows.get_mut(mono.raw()) {
                    r[j] = coef;
                }
            }
        }
    }
    let nrows = rows.len();
    let data: Vec<u32> = rows.into_values().flatten().collect();
    FMatrix::from_rows(field, nrows, np, data)
}

/// Subfamily of members with multiplicity at least `m` at `x`.
///
/// The surviving parameters are the free columns of the reduced condition
/// matrix and keep their names; the eliminated ones are expressed through
/// them.
pub fn impose_point_multiplicity(
    fam: &ParametricFamily,
    x: &ProjectivePoint,
    m: u32,
) -> Result<ParametricFamily> {
    let rr = condition_matrix(fam, x, m)?.row_reduce();
    let free: Vec<usize> = (0..fam.nparams()).filter(|c| !rr.pivots.contains(c)).collect();
    let names: Vec<String> = free.iter().map(|&c| fam.params()[c].clone()).collect();
    fam.reparametrize(names, &rr.kernel)
}

/// A family together with point conditions imposed on it.
#[derive(Clone, Debug)]
pub struct LinearSystemWithConditions {
    pub family: ParametricFamily,
    pub conditions: Vec<(ProjectivePoint, u32)>,
}

impl LinearSystemWithConditions {
    pub fn new(family: ParametricFamily) -> Self {
        LinearSystemWithConditions {
            family,
            conditions: Vec::new(),
        }
    }

    pub fn with_condition(mut self, x: ProjectivePoint, m: u32) -> Self {
        self.conditions.push((x, m));
        self
    }

    /// All condition rows stacked.
    pub fn condition_matrix(&self) -> Result<FMatrix> {
        let field = self.family.geom_ring().field();
        let mut all = FMatrix::zeros(field, 0, self.family.nparams());
        for (x, m) in &self.conditions {
            let c = condition_matrix(&self.family, x, *m)?;
            for r in 0..c.rows() {
                all.push_row(c.row(r))?;
            }
        }
        Ok(all)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.condition_matrix()?.rank())
    }

    /// Number of surviving parameters.
    pub fn surviving_parameters(&self) -> Result<usize> {
        Ok(self.family.nparams() - self.rank()?)
    }

    /// Subfamily satisfying every condition.
    pub fn surviving_family(&self) -> Result<ParametricFamily> {
        let rr = self.condition_matrix()?.row_reduce();
        let free: Vec<usize> = (0..self.family.nparams())
            .filter(|c| !rr.pivots.contains(c))
            .collect();
        let names: Vec<String> = free.iter().map(|&c| self.family.params()[c].clone()).collect();
        self.family.reparametrize(names, &rr.kernel)
    }
}

/// Family of all plane curves of degree `d`, monomials in descending grevlex.
pub fn plane_curves(field: crate::modfield::PrimeField, d: u32) -> Result<ParametricFamily> {
    let ring = RingDescriptor::indexed(field, "x", 3, MonomialOrder::Grevlex)?;
    let members: Vec<Polynomial> = monomials_of_degree(&ring, d)
        .into_iter()
        .map(|m: Monomial| Polynomial::monomial(&ring, m, 1))
        .collect();
    ParametricFamily::indexed(&ring, "c", members)
}

/// Projective dimension of plane curves of degree `d` with the given point
/// multiplicities: `C(d+2, 2) − rank − 1`, with −1 for an empty system.
pub fn plane_system_dimension(d: u32, conditions: &[(ProjectivePoint, u32)]) -> Result<i64> {
    let field = match conditions.first() {
        Some((x, _)) => x.field(),
        None => crate::modfield::PrimeField::default(),
    };
    if conditions.iter().any(|(x, _)| x.coords().len() != 3) {
        return Err(Error::OutOfRange("plane conditions need points of P^2".into()));
    }
    let mut sys = LinearSystemWithConditions::new(plane_curves(field, d)?);
    for (x, m) in conditions {
        sys = sys.with_condition(x.clone(), *m);
    }
    let total = sys.family.nparams() as i64;
    Ok(total - sys.rank()? as i64 - 1)
}
