//! Sparse multivariate polynomials over F_p.

mod family;
mod maps;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;
mod univariate;

pub use family::ParametricFamily;
pub use maps::{apply_ring_map, jacobian, jacobian_minors, minors, RingMap};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{compare_monomials, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{lowest_form, Polynomial, Term};
pub use ring::{same_ring, Ring, RingDescriptor};
pub use univariate::UniPoly;


