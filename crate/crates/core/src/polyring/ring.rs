use std::collections::HashSet;
use std::sync::Arc;

use super::monomial::MAX_VARS;
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::modfield::PrimeField;

/// Coefficient field, variable names and monomial order of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<RingDescriptor>;

impl RingDescriptor {
    pub fn new<S: Into<String>>(
        field: PrimeField,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::WeightedGraded(w) = &order {
            if w.len() != vars.len() || w.contains(&0) {
                return Err(Error::OutOfRange("order weights".into()));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::OutOfRange("elimination block".into()));
            }
        }
        Ok(Arc::new(RingDescriptor { field, vars, order }))
    }

    /// Ring with variables `name_0 .. name_{n-1}`.
    pub fn indexed(field: PrimeField, name: &str, n: usize, order: MonomialOrder) -> Result<Ring> {
        Self::new(field, (0..n).map(|i| format!("{name}_{i}")), order)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Self::new(self.field, self.vars.clone(), order)
    }

    /// Same names and order over another prime.
    pub fn with_field(&self, field: PrimeField) -> Ring {
        Arc::new(RingDescriptor {
            field,
            vars: self.vars.clone(),
            order: self.order.clone(),
        })
    }

    /// A variable name not already used by this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        (0..)
            .map(|i| format!("{stem}_{i}"))
            .find(|n| self.var_index(n).is_none())
            .unwrap()
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
