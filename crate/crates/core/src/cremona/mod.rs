//! Plane linear systems under quadratic transformations and divisor-class
//! arithmetic on the iterated blow-up of P^3.

mod divisor;
mod system;

pub use divisor::{
    blowup_basis, canonical_class, class_sum, sigma_bullet, DivisorClass, BLOWUP_BASIS,
};
pub use system::{
    parse_chain, quadratic_transform, run_chain, system_invariants, ChainStep, ChainTrace,
    Invariants, PlaneLinearSystem,
};

#[cfg(test)]
mod tests;
