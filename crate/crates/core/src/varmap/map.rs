use std::sync::Arc;

use super::point::ProjectivePoint;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{same_ring, Polynomial, Ring, RingMap};

/// Rational map given by forms of one degree, one per target variable.
///
/// The source may carry an ideal (the map is then restricted to that
/// variety) and a parametrization: a map from some projective space whose
/// image is dense in the source variety. Sampling and exact certificates
/// go through the parametrization when present.
#[derive(Clone)]
pub struct RationalMap {
    source: Ring,
    source_ideal: Option<Ideal>,
    param: Option<Arc<RationalMap>>,
    target: Ring,
    forms: Vec<Polynomial>,
    degree: u32,
}

impl RationalMap {
    pub fn new(source: &Ring, target: &Ring, forms: Vec<Polynomial>) -> Result<Self> {
        if forms.len() != target.nvars() {
            return Err(Error::LengthMismatch {
                expected: target.nvars(),
                got: forms.len(),
            });
        }
        if forms.iter().any(|f| !same_ring(f.ring(), source)) {
            return Err(Error::RingMismatch);
        }
        let degree = forms
            .iter()
            .find_map(|f| f.degree())
            .ok_or(Error::ZeroPolynomial)?;
        if forms
            .iter()
            .any(|f| !f.is_homogeneous() || (!f.is_zero() && f.degree() != Some(degree)))
        {
            return Err(Error::UnequalDegrees);
        }
        Ok(RationalMap {
            source: source.clone(),
            source_ideal: None,
            param: None,
            target: target.clone(),
            forms,
            degree,
        })
    }

    /// Parses forms in the source ring.
    pub fn parse<S: AsRef<str>>(source: &Ring, target: &Ring, forms: &[S]) -> Result<Self> {
        let f = forms
            .iter()
            .map(|s| Polynomial::parse(s.as_ref(), source))
            .collect::<Result<_>>()?;
        Self::new(source, target, f)
    }

    pub fn identity(ring: &Ring) -> Self {
        let forms = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Self::new(ring, ring, forms).expect("identity map")
    }

    /// Restriction to `V(ideal)`; fails if every form vanishes there.
    pub fn restrict(&self, ideal: &Ideal) -> Result<Self> {
        if !same_ring(ideal.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let gb = ideal.groebner();
        let mut nonzero = false;
        for f in &self.forms {
            if !gb.normal_form(f)?.is_zero() {
                nonzero = true;
                break;
            }
        }
        if !nonzero {
            return Err(Error::BasePoint);
        }
        let mut m = self.clone();
        m.source_ideal = Some(ideal.clone());
        Ok(m)
    }

    /// Attaches a parametrization of the source variety.
    pub fn with_parametrization(&self, param: &RationalMap) -> Result<Self> {
        if !same_ring(param.target(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let mut m = self.clone();
        m.param = Some(Arc::new(param.clone()));
        Ok(m)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn source_ideal(&self) -> Option<&Ideal> {
        self.source_ideal.as_ref()
    }

    pub fn parametrization(&self) -> Option<&RationalMap> {
        self.param.as_deref()
    }

    /// The ideal generated by the forms.
    pub fn forms_ideal(&self) -> Ideal {
        Ideal::new(&self.source, self.forms.clone())
    }

    /// `next ∘ self`. The source data of `self` is kept.
    pub fn then(&self, next: &RationalMap) -> Result<RationalMap> {
        if !same_ring(next.source(), &self.target) {
            return Err(Error::RingMismatch);
        }
        let mut sub = RingMap::new(self.forms.clone(), &self.source);
        let forms = next.forms.iter().map(|f| sub.apply(f)).collect();
        let mut m = RationalMap::new(&self.source, &next.target, forms)?;
        m.source_ideal = self.source_ideal.clone();
        m.param = self.param.clone();
        Ok(m)
    }

    /// Forms pulled back along the parametrization chain, as polynomials
    /// on the root projective space.
    pub fn forms_on_root(&self) -> Result<(Ring, Vec<Polynomial>)> {
        match &self.param {
            None => Ok((self.source.clone(), self.forms.clone())),
            Some(p) => {
                let (root, pf) = p.forms_on_root()?;
                let mut sub = RingMap::new(pf, &root);
                Ok((root, self.forms.iter().map(|f| sub.apply(f)).collect()))
            }
        }
    }

    /// Maps in sampling order: root parametrization first, `self` last.
    pub fn chain(&self) -> Vec<RationalMap> {
        let mut v = match &self.param {
            None => Vec::new(),
            Some(p) => p.chain(),
        };
        v.push(self.clone());
        v
    }

    /// Raw form values at a coordinate vector.
    pub fn eval_raw(&self, x: &[u32]) -> Vec<u32> {
        self.forms.iter().map(|f| f.eval(x)).collect()
    }

    /// Whether `apply_ring_map(forms, g)` vanishes on the source variety;
    /// exact, via the parametrization or the source ideal.
    pub fn pulls_back_to_zero(&self, g: &Polynomial) -> Result<bool> {
        if !same_ring(g.ring(), &self.target) {
            return Err(Error::RingMismatch);
        }
        if self.param.is_some() {
            let (root, f) = self.forms_on_root()?;
            let mut sub = RingMap::new(f, &root);
            return Ok(sub.apply(g).is_zero());
        }
        let mut sub = RingMap::new(self.forms.clone(), &self.source);
        let h = sub.apply(g);
        match &self.source_ideal {
            None => Ok(h.is_zero()),
            Some(i) => Ok(i.groebner().normal_form(&h)?.is_zero()),
        }
    }
}

/// Image point `[f_0(x) : ... : f_m(x)]`.
pub fn eval_map(phi: &RationalMap, x: &ProjectivePoint) -> Result<ProjectivePoint> {
    if x.coords().len() != phi.source().nvars() || x.field() != phi.source().field() {
        return Err(Error::RingMismatch);
    }
    let v = phi.eval_raw(x.coords());
    if v.iter().all(|&c| c == 0) {
        return Err(Error::BasePoint);
    }
    ProjectivePoint::new(x.field(), &v)
}
