//! Exact algebra over prime fields for projective varieties and rational maps.

pub mod cremona;
pub mod error;
pub mod groebner;
pub mod io;
pub mod modfield;
pub mod polyring;
pub mod varmap;

pub use error::{Error, Result};
