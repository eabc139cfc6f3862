//! Rational maps between projective varieties and the geometry around them.

mod fiber;
mod image;
mod inverse;
mod linsys;
mod map;
mod point;
mod sample;
mod singular;
mod util;

pub use fiber::{base_locus, certify_base_locus, fiber, map_degree, map_degree_seeded, BaseLocusCertificate, FIBER_RETRIES};
pub use image::{
    certify, image, image_elimination, image_interpolation, image_seeded, image_toric,
    integer_kernel, ImageStrategy,
};
pub use inverse::{
    inverse_fixes_samples, inverse_identity_holds, inverse_map, inverse_map_seeded,
    proportional_forms, same_rational_map, IMAGE_DEGREE_BOUND,
};
pub use linsys::{
    condition_matrix, impose_point_multiplicity, plane_curves, plane_system_dimension,
    LinearSystemWithConditions,
};
pub use map::{eval_map, RationalMap};
pub use point::ProjectivePoint;
pub use sample::{random_coords, rng_for, sample_points, sample_source_and_image, sample_with};
pub use singular::{node_type, quadric_rank, singular_locus, NodeType};
pub use util::{eval_monomials, image_dimension, jacobian_rank_at, monomials_of_degree, poly_from_coeffs};
