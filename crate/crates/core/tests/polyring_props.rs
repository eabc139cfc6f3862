use std::cmp::Ordering;

use projgeom::modfield::PrimeField;
use projgeom::polyring::{
    apply_ring_map, compare_monomials, lowest_form, parse_poly, Monomial, MonomialOrder,
    Polynomial, Ring, RingDescriptor, RingMap,
};
use projgeom::io::{read_family, read_ideal_list, read_map};
use proptest::prelude::*;

const NV: usize = 3;

fn ring(order: MonomialOrder) -> Ring {
    RingDescriptor::new(PrimeField::new(10000019).unwrap(), ["x", "y", "z"], order).unwrap()
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::WeightedGraded(vec![1, 2, 3])),
        Just(MonomialOrder::Elimination(1)),
    ]
}

type RawPoly = Vec<([u32; NV], u32)>;

fn raw_poly(max_deg: u32) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(([0..=max_deg, 0..=max_deg, 0..=max_deg], 0u32..10000019), 0..6)
}

fn build(r: &Ring, raw: &RawPoly) -> Polynomial {
    Polynomial::from_terms(r, raw.iter().map(|(e, c)| (Monomial::from_exps(e), *c)).collect())
}

fn exps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..5, NV)
}

proptest! {
    #[test]
    fn ring_axioms(a in raw_poly(3), b in raw_poly(3), c in raw_poly(3), o in orders()) {
        let r = ring(o);
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &Polynomial::one(&r), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn order_axioms(a in exps(), b in exps(), c in exps(), o in orders()) {
        let ab = compare_monomials(&o, &a, &b).unwrap();
        prop_assert_eq!(compare_monomials(&o, &b, &a).unwrap(), ab.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let add = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(p, q)| p + q).collect() };
        prop_assert_eq!(compare_monomials(&o, &add(&a, &c), &add(&b, &c)).unwrap(), ab);
        prop_assert_ne!(compare_monomials(&o, &a, &[0; NV]).unwrap(), Ordering::Less);
        let bc = compare_monomials(&o, &b, &c).unwrap();
        if ab == Ordering::Less && bc == Ordering::Less {
            prop_assert_eq!(compare_monomials(&o, &a, &c).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn print_parse_roundtrip(a in raw_poly(4), o in orders()) {
        let r = ring(o);
        let f = build(&r, &a);
        prop_assert_eq!(parse_poly(&f.to_canonical_string(), &r).unwrap(), f.clone());
        prop_assert_eq!(parse_poly(&f.to_signed_string(), &r).unwrap(), f);
    }

    #[test]
    fn ring_map_composition(
        f in raw_poly(1),
        g in prop::collection::vec(raw_poly(1), NV),
        h in prop::collection::vec(raw_poly(1), NV),
    ) {
        let r = ring(MonomialOrder::Grevlex);
        let f = build(&r, &f);
        let g: Vec<Polynomial> = g.iter().map(|p| build(&r, p)).collect();
        let h: Vec<Polynomial> = h.iter().map(|p| build(&r, p)).collect();
        // x ↦ g(x), then x ↦ h(x)
        let gf = apply_ring_map(&g, &f).unwrap();
        let both = apply_ring_map(&h, &gf).unwrap();
        let composed: Vec<Polynomial> = g.iter().map(|gi| apply_ring_map(&h, gi).unwrap()).collect();
        prop_assert_eq!(apply_ring_map(&composed, &f).unwrap(), both.clone());
        let mut hm = RingMap::new(h.clone(), &r);
        let mut c = RingMap::new(g.clone(), &r).compose_after(&mut hm);
        prop_assert_eq!(c.apply(&f), both);
    }

    #[test]
    fn lowest_form_is_multiplicative(a in raw_poly(3), b in raw_poly(3)) {
        let r = ring(MonomialOrder::Grevlex);
        let (f, g) = (build(&r, &a), build(&r, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lf = lowest_form(&f).unwrap();
        let lg = lowest_form(&g).unwrap();
        let prod = &lf * &lg;
        prop_assume!(!prod.is_zero());
        prop_assert_eq!(lowest_form(&(&f * &g)).unwrap(), prod);
    }
}

macro_rules! fixture {
    ($f:literal) => {
        include_str!(concat!("../../replay/fixtures/", $f))
    };
}

fn roundtrip_all(polys: &[Polynomial]) {
    for f in polys {
        let r = f.ring();
        assert_eq!(parse_poly(&f.to_canonical_string(), r).unwrap(), *f);
        assert_eq!(parse_poly(&f.to_signed_string(), r).unwrap(), *f);
    }
}

#[test]
fn fixture_literals_roundtrip() {
    for text in [fixture!("w_quadrics.ideal"), fixture!("q_quadrics.ideal"), fixture!("lines_r.ideal")] {
        let (_, ideals) = read_ideal_list(text, None).unwrap();
        for i in ideals {
            roundtrip_all(i.gens());
        }
    }
    for text in [
        fixture!("pi.map"),
        fixture!("rho.map"),
        fixture!("q.map"),
        fixture!("q_inverse.map"),
        fixture!("w_to_p3.map"),
        fixture!("nu.map"),
    ] {
        roundtrip_all(&read_map(text, None, None, None).unwrap().forms);
    }
    for text in [
        fixture!("sextic_family.family"),
        fixture!("triple_point_family.family"),
        fixture!("tangent_cone.family"),
    ] {
        let fam = read_family(text, None, None).unwrap();
        roundtrip_all(fam.members());
        roundtrip_all(std::slice::from_ref(fam.generic_element()));
    }
}
