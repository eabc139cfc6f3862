use projgeom::modfield::{FMatrix, PrimeField};
use proptest::prelude::*;

fn field() -> PrimeField {
    PrimeField::new(10000019).unwrap()
}

fn matrix() -> impl Strategy<Value = (usize, usize, Vec<u32>)> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        // small entries make dependent rows likely
        (Just(r), Just(c), prop::collection::vec(0u32..4, r * c))
    })
}

proptest! {
    #[test]
    fn inverse_laws(a in 1u32..10000019, b in 1u32..10000019) {
        let f = field();
        let ab = f.mul(a, b);
        prop_assert_eq!(f.inv(ab).unwrap(), f.mul(f.inv(b).unwrap(), f.inv(a).unwrap()));
        prop_assert_eq!(f.inv(f.inv(a).unwrap()).unwrap(), a);
        prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }

    #[test]
    fn kernel_vectors_are_annihilated((r, c, data) in matrix()) {
        let m = FMatrix::from_rows(field(), r, c, data).unwrap();
        let ker = m.kernel_basis();
        prop_assert_eq!(ker.len(), c - m.rank());
        for k in &ker {
            prop_assert!(m.mul_vec(k).unwrap().iter().all(|&x| x == 0));
        }
        let rr = m.row_reduce();
        prop_assert_eq!(rr.reduced.rank(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn row_reduction_is_deterministic((r, c, data) in matrix()) {
        let m = FMatrix::from_rows(field(), r, c, data).unwrap();
        let a = m.row_reduce();
        let b = m.clone().row_reduce();
        prop_assert_eq!(a.pivots, b.pivots);
        prop_assert_eq!(a.kernel, b.kernel);
        prop_assert_eq!(a.reduced, b.reduced);
    }
}

#[test]
fn zero_matrix_kernel_is_standard_basis() {
    let m = FMatrix::zeros(field(), 2, 3);
    assert_eq!(m.rank(), 0);
    assert_eq!(m.kernel_basis(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
}
