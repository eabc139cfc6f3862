//! Arithmetic in F_p and dense exact linear algebra.

mod field;
mod matrix;

pub use field::{inv, FieldScalar, PrimeField, DEFAULT_PRIME};
pub use matrix::{FMatrix, RowReduction};
