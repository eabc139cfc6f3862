use std::fmt;

use crate::error::{Error, Result};
use crate::modfield::PrimeField;

/// Point of projective space; the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    field: PrimeField,
    coords: Vec<u32>,
}

impl ProjectivePoint {
    pub fn new(field: PrimeField, coords: &[u32]) -> Result<Self> {
        let k = coords
            .iter()
            .position(|&c| c % field.modulus() != 0)
            .ok_or(Error::OutOfRange("all-zero projective coordinates".into()))?;
        let inv = field.inv(coords[k] % field.modulus())?;
        Ok(ProjectivePoint {
            field,
            coords: coords
                .iter()
                .map(|&c| field.mul(c % field.modulus(), inv))
                .collect(),
        })
    }

    pub fn from_i64(field: PrimeField, coords: &[i64]) -> Result<Self> {
        let c: Vec<u32> = coords.iter().map(|&v| field.from_i64(v)).collect();
        Self::new(field, &c)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Index of the last nonzero coordinate (the affine chart used for
    /// local computations).
    pub fn chart(&self) -> usize {
        self.coords.iter().rposition(|&c| c != 0).unwrap()
    }

    /// Representative with coordinate `chart()` equal to 1.
    pub fn chart_coords(&self) -> Vec<u32> {
        let c = self.chart();
        let inv = self.field.inv(self.coords[c]).unwrap();
        self.coords.iter().map(|&v| self.field.mul(v, inv)).collect()
    }

    /// Coordinates as symmetric residues.
    pub fn signed(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| self.field.to_signed(c)).collect()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.signed().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
