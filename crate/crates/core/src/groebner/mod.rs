//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod hilbert;
mod ideal;
mod ops;
mod points;
mod reduce;
mod tangent;

pub use hilbert::{hilbert_data, hilbert_dim_degree, hilbert_numerator, HilbertData};
pub use ideal::{contains, groebner_basis, ideals_equal, normal_form, s_pairs_reduce, GroebnerBasis, Ideal};
pub use points::{rational_points_zero_dim, RationalPoints};
pub use tangent::{cone_at_origin, tangent_cone, tangent_cone_affine, tangent_cone_projective};
pub use ops::{
    divide_exact, eliminate, eliminate_names, intersect, quotient_poly, saturate,
    saturate_irrelevant, saturate_poly,
};

#[cfg(test)]
mod tests;
