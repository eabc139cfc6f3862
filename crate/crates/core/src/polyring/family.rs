use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::poly::Polynomial;
use super::ring::{same_ring, Ring, RingDescriptor};
use crate::error::{Error, Result};

/// A linear family `Σ l_i · F_i` of forms of one degree.
///
/// The parameters are the first variables of a combined ring; the
/// geometric variables follow, in the order of `geom_ring`.
#[derive(Clone, Debug)]
pub struct ParametricFamily {
    geom_ring: Ring,
    ring: Ring,
    params: Vec<String>,
    members: Vec<Polynomial>,
    generic: Polynomial,
}

impl ParametricFamily {
    /// Family with parameter `names[i]` attached to `members[i]`.
    pub fn new<S: Into<String>>(
        geom_ring: &Ring,
        names: impl IntoIterator<Item = S>,
        members: Vec<Polynomial>,
    ) -> Result<Self> {
        let params: Vec<String> = names.into_iter().map(Into::into).collect();
        if params.len() != members.len() {
            return Err(Error::LengthMismatch {
                expected: params.len(),
                got: members.len(),
            });
        }
        let deg = members.iter().find_map(|m| m.degree());
        for m in &members {
            if !same_ring(m.ring(), geom_ring) {
                return Err(Error::RingMismatch);
            }
            if !m.is_homogeneous() || (!m.is_zero() && m.degree() != deg) {
                return Err(Error::UnequalDegrees);
            }
        }
        let vars = params.iter().cloned().chain(geom_ring.vars().iter().cloned());
        let ring = RingDescriptor::new(geom_ring.field(), vars, MonomialOrder::Grevlex)?;
        let k = params.len();
        let shift: Vec<usize> = (0..geom_ring.nvars()).map(|v| v + k).collect();
        let mut terms = Vec::new();
        for (i, m) in members.iter().enumerate() {
            for &(mono, c) in m.terms() {
                let shifted = mono.permuted(&shift);
                terms.push((shifted.mul(&Monomial::var(i)), c));
            }
        }
        let generic = Polynomial::from_terms(&ring, terms);
        Ok(ParametricFamily {
            geom_ring: geom_ring.clone(),
            ring,
            params,
            members,
            generic,
        })
    }

    /// Family with parameters `{stem}_0, {stem}_1, ...`.
    pub fn indexed(geom_ring: &Ring, stem: &str, members: Vec<Polynomial>) -> Result<Self> {
        let n = members.len();
        Self::new(geom_ring, (0..n).map(|i| format!("{stem}_{i}")), members)
    }

    /// Reads a family back from a generic element that is linear in the
    /// first `nparams` variables of its ring.
    pub fn from_generic(generic: &Polynomial, nparams: usize, geom_ring: &Ring) -> Result<Self> {
        let ring = generic.ring();
        if ring.nvars() != nparams + geom_ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let mut members = vec![Vec::new(); nparams];
        let back: Vec<usize> = (0..ring.nvars())
            .map(|v| v.saturating_sub(nparams))
            .collect();
        for &(m, c) in generic.terms() {
            let pdeg = m.block_degree(0, nparams);
            if pdeg != 1 {
                return Err(Error::Unsupported("generic element not linear in parameters".into()));
            }
            let i = (0..nparams).find(|&i| m.exp(i) == 1).unwrap();
            let geo = m.with_exp(i, 0).permuted(&back);
            members[i].push((geo, c));
        }
        let members = members
            .into_iter()
            .map(|t| Polynomial::from_terms(geom_ring, t))
            .collect();
        Self::new(geom_ring, ring.vars()[..nparams].to_vec(), members)
    }

    pub fn geom_ring(&self) -> &Ring {
        &self.geom_ring
    }

    /// Combined ring: parameters first, then geometric variables.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn members(&self) -> &[Polynomial] {
        &self.members
    }

    pub fn generic_element(&self) -> &Polynomial {
        &self.generic
    }

    /// Degree of the members in the geometric variables.
    pub fn degree(&self) -> Option<u32> {
        self.members.iter().find_map(|m| m.degree())
    }

    /// Member for the given parameter values.
    pub fn specialize(&self, values: &[u32]) -> Result<Polynomial> {
        if values.len() != self.nparams() {
            return Err(Error::LengthMismatch {
                expected: self.nparams(),
                got: values.len(),
            });
        }
        let mut acc = Polynomial::zero(&self.geom_ring);
        for (m, &v) in self.members.iter().zip(values) {
            acc = acc.add_scaled(m, v);
        }
        Ok(acc)
    }

    /// Subfamily whose old parameters are `old_i = Σ_j basis[j][i] · new_j`;
    /// `basis` lists one coefficient vector per new parameter.
    pub fn reparametrize<S: Into<String>>(
        &self,
        names: impl IntoIterator<Item = S>,
        basis: &[Vec<u32>],
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let members = basis
            .iter()
            .map(|v| self.specialize(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.geom_ring, names, members)
    }
}
