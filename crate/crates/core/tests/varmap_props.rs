use projgeom::groebner::{hilbert_dim_degree, ideals_equal};
use projgeom::modfield::PrimeField;
use projgeom::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingDescriptor};
use projgeom::varmap::{
    certify, eval_map, fiber, image_elimination, image_interpolation, inverse_fixes_samples,
    inverse_map, map_degree, random_coords, rng_for, ProjectivePoint, RationalMap,
};
use proptest::prelude::*;

fn field() -> PrimeField {
    PrimeField::new(10000019).unwrap()
}

fn rings() -> (Ring, Ring) {
    let f = field();
    (
        RingDescriptor::new(f, ["x", "y"], MonomialOrder::Grevlex).unwrap(),
        RingDescriptor::new(f, ["a", "b", "c"], MonomialOrder::Grevlex).unwrap(),
    )
}

/// Three random binary forms of degree `d`, composed with `(x, y) ↦ (x^k, y^k)`.
fn plane_curve_map(d: u32, k: u32, coeffs: &[u32]) -> RationalMap {
    let (src, tgt) = rings();
    let forms = (0..3)
        .map(|j| {
            let terms = (0..=d)
                .map(|i| (Monomial::from_exps(&[k * i, k * (d - i)]), coeffs[j * 5 + i as usize]))
                .collect();
            Polynomial::from_terms(&src, terms)
        })
        .collect();
    RationalMap::new(&src, &tgt, forms).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..10000019, 15)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn strategies_agree_on_plane_curves(d in 2u32..=3, c in coeffs()) {
        let phi = plane_curve_map(d, 1, &c);
        let a = image_interpolation(&phi, 4, 1).unwrap();
        let b = image_elimination(&phi).unwrap();
        prop_assert!(ideals_equal(&a, &b).unwrap());
        certify(&phi, &a).unwrap();
        prop_assert_eq!(hilbert_dim_degree(&a).unwrap(), (1, d as u64));
    }

    #[test]
    fn fiber_degrees_sum_to_map_degree(k in 1u32..=2, c in coeffs(), seed in 0u64..1000) {
        let phi = plane_curve_map(2, k, &c);
        let deg = map_degree(&phi).unwrap();
        prop_assert_eq!(deg, k as u64);
        let mut rng = rng_for(seed, 9);
        let mut total = 0;
        let mut used = 0;
        for _ in 0..4 {
            let x = ProjectivePoint::new(field(), &random_coords(&mut rng, field(), 2)).unwrap();
            let Ok(y) = eval_map(&phi, &x) else { continue };
            let (dim, fdeg) = hilbert_dim_degree(&fiber(&phi, &y).unwrap()).unwrap();
            if dim == 0 {
                total += fdeg;
                used += 1;
            }
        }
        prop_assert!(used > 0);
        prop_assert_eq!(total, deg * used);
    }

    #[test]
    fn inverse_of_a_conic_parametrization(c in coeffs()) {
        let phi = plane_curve_map(2, 1, &c);
        let img = image_interpolation(&phi, 4, 0).unwrap();
        let h = inverse_map(&phi, 3).unwrap();
        prop_assert!(h.source_ideal().is_some());
        prop_assert!(ideals_equal(h.source_ideal().unwrap(), &img).unwrap());
        prop_assert!(inverse_fixes_samples(&phi, &h, 100, 5).unwrap());
    }
}
