use super::*;
use crate::modfield::PrimeField;
use crate::polyring::{MonomialOrder, Polynomial, Ring, RingDescriptor};

fn ring(vars: &[&str], order: MonomialOrder) -> Ring {
    RingDescriptor::new(PrimeField::default(), vars.iter().copied(), order).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn poly(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(s, r).unwrap()
}

#[test]
fn linear_lex_basis() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Lex);
    let gb = ideal(&r, &["x - y", "y - z"]).groebner();
    let want = vec![poly(&r, "y - z"), poly(&r, "x - z")];
    assert_eq!(gb.elements(), &want[..]);
    assert!(gb.is_groebner() && gb.is_reduced());
}

#[test]
fn principal_becomes_monic() {
    let r = ring(&["x", "y"], MonomialOrder::Grevlex);
    let gb = ideal(&r, &["3*x^2 - 6*y"]).groebner();
    assert_eq!(gb.elements(), &[poly(&r, "x^2 - 2*y")][..]);
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"], MonomialOrder::Grevlex);
    let i = ideal(&r, &["x^2 - y", "y^2 - 1"]);
    let gb = i.groebner();
    assert_eq!(gb.normal_form(&poly(&r, "x^2*y")).unwrap(), Polynomial::one(&r));
    assert!(gb.normal_form(&Polynomial::zero(&r)).unwrap().is_zero());
    let empty = Ideal::zero(&r).groebner();
    let f = poly(&r, "x*y + 1");
    assert_eq!(empty.normal_form(&f).unwrap(), f);
}

#[test]
fn idempotent_and_presentation_independent() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
    let a = ideal(&r, &["x^2 - y*z", "x*y - z^2", "y^3 - x*z"]);
    let gb = a.groebner();
    let again = Ideal::new(&r, gb.elements().to_vec()).groebner();
    assert_eq!(gb.elements(), again.elements());
    let b = ideal(&r, &["x^2 - y*z + x*y - z^2", "x*y - z^2", "y^3 - x*z + 5*x^2 - 5*y*z"]);
    assert!(ideals_equal(&a, &b).unwrap());
}

#[test]
fn twisted_cubic_elimination() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
    let i = ideal(&r, &["y - x^2", "z - x^3"]);
    let e = eliminate(&i, &[0]).unwrap();
    assert!(e.gens().iter().all(|g| g.degree_in(0) == 0));
    assert!(e.contains_poly(&poly(&r, "z^2 - y^3")).unwrap());
    assert!(contains(&i, &e).unwrap());
    let same = eliminate(&i, &[]).unwrap();
    assert!(ideals_equal(&same, &i).unwrap());
    assert!(eliminate(&i, &[5]).is_err());
}

#[test]
fn saturation_examples() {
    let r = ring(&["x", "y"], MonomialOrder::Grevlex);
    let i = ideal(&r, &["x^2*y"]);
    let s = saturate(&i, &ideal(&r, &["x"])).unwrap();
    assert!(ideals_equal(&s, &ideal(&r, &["y"])).unwrap());
    let s1 = saturate(&i, &Ideal::unit(&r)).unwrap();
    assert!(ideals_equal(&s1, &i).unwrap());
    assert!(saturate(&i, &Ideal::zero(&r)).is_err());
    // Inhomogeneous path.
    let j = ideal(&r, &["x^2*y + x^2"]);
    let s2 = saturate(&j, &ideal(&r, &["x"])).unwrap();
    assert!(ideals_equal(&s2, &ideal(&r, &["y + 1"])).unwrap());
}

#[test]
fn irrelevant_saturation_removes_embedded_point() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
    // (x) ∩ (x, y, z)^2
    let i = ideal(&r, &["x^2", "x*y", "x*z"]);
    let s = saturate_irrelevant(&i).unwrap();
    assert!(ideals_equal(&s, &ideal(&r, &["x"])).unwrap());
    let m = Ideal::irrelevant(&r);
    assert!(saturate_irrelevant(&m).unwrap().is_unit());
}

#[test]
fn intersection_of_coordinate_lines() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
    let a = ideal(&r, &["x", "y"]);
    let b = ideal(&r, &["y", "z"]);
    let c = intersect(&a, &b).unwrap();
    assert!(ideals_equal(&c, &ideal(&r, &["y", "x*z"])).unwrap());
}

#[test]
fn containment_examples() {
    let r = ring(&["x", "y"], MonomialOrder::Grevlex);
    let i = ideal(&r, &["x*y", "y^2"]);
    assert!(contains(&i, &i).unwrap());
    assert!(!contains(&ideal(&r, &["y"]), &ideal(&r, &["x"])).unwrap());
}

#[test]
fn dim_degree_examples() {
    let r = RingDescriptor::indexed(PrimeField::default(), "x", 3, MonomialOrder::Grevlex).unwrap();
    assert_eq!(hilbert_dim_degree(&Ideal::irrelevant(&r)).unwrap(), (-1, 0));
    assert_eq!(hilbert_dim_degree(&ideal(&r, &["x_0", "x_1"])).unwrap(), (0, 1));
    let cubic = ideal(&r, &["x_0^3 + x_1^3 + x_2^3"]);
    assert_eq!(hilbert_dim_degree(&cubic).unwrap(), (1, 3));
    let r4 = RingDescriptor::indexed(PrimeField::default(), "t", 4, MonomialOrder::Grevlex).unwrap();
    let ci = ideal(&r4, &["t_0*t_1 - t_2*t_3", "t_0^2 + t_1^2 - t_3^2"]);
    assert_eq!(hilbert_dim_degree(&ci).unwrap(), (1, 4));
    let inh = ideal(&r, &["x_0 + 1"]);
    assert_eq!(hilbert_dim_degree(&inh), Err(crate::Error::NotHomogeneous));
}

#[test]
fn tangent_cone_examples() {
    let r = ring(&["x", "y"], MonomialOrder::Grevlex);
    let nodal = ideal(&r, &["y^2 - x^2 - x^3"]);
    let tc = tangent_cone(&nodal, &[0, 0]).unwrap();
    assert!(ideals_equal(&tc, &ideal(&r, &["y^2 - x^2"])).unwrap());
    let smooth = ideal(&r, &["y - x^2"]);
    let tc = tangent_cone(&smooth, &[0, 0]).unwrap();
    assert!(ideals_equal(&tc, &ideal(&r, &["y"])).unwrap());
    assert_eq!(tangent_cone(&smooth, &[1, 0]).unwrap_err(), crate::Error::PointNotOnVariety);
    // Two generators: the twisted cubic's affine chart at the origin.
    let r3 = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
    let tw = ideal(&r3, &["y - x^2", "z - x*y"]);
    let tc = tangent_cone(&tw, &[0, 0, 0]).unwrap();
    assert!(ideals_equal(&tc, &ideal(&r3, &["y", "z"])).unwrap());
    // Two lines y(y - x) = 0, z = 0 through the origin.
    let lines = ideal(&r3, &["y^2 - x*y", "z + x^3"]);
    let tc = tangent_cone(&lines, &[0, 0, 0]).unwrap();
    assert!(ideals_equal(&tc, &ideal(&r3, &["y^2 - x*y", "z"])).unwrap());
    // Projective: node of the cubic y^2 z = x^2 (x + z) at [0:0:1].
    let pr = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
    let c = ideal(&pr, &["y^2*z - x^3 - x^2*z"]);
    let tc = tangent_cone(&c, &[0, 0, 1]).unwrap();
    assert!(ideals_equal(&tc, &ideal(&pr, &["y^2 - x^2"])).unwrap());
}

#[test]
fn rational_points_examples() {
    let r = RingDescriptor::indexed(PrimeField::default(), "x", 3, MonomialOrder::Grevlex).unwrap();
    let pts = rational_points_zero_dim(&ideal(&r, &["x_0", "x_1"])).unwrap();
    assert_eq!(pts.points, vec![vec![0, 0, 1]]);
    assert!(rational_points_zero_dim(&Ideal::irrelevant(&r)).unwrap().points.is_empty());
    // Four points: x_0 x_1 = 0 and x_2^2 = x_0^2 + x_1^2 minus ... check via a product.
    let i = ideal(&r, &["x_0*x_1", "x_2^2 - x_0^2 - x_1^2"]);
    let pts = rational_points_zero_dim(&i).unwrap();
    let m = |v: i64| PrimeField::default().from_i64(v);
    let mut want = vec![vec![1, 0, 1], vec![1, 0, m(-1)], vec![0, 1, 1], vec![0, 1, m(-1)]];
    want.sort();
    assert_eq!(pts.points, want);
    assert_eq!(pts.unresolved_degree, 0);
    assert!(rational_points_zero_dim(&ideal(&r, &["x_0"])).is_err());
    // x^2 + 1 has no root mod 7: two unresolved points.
    let r7 = RingDescriptor::indexed(PrimeField::new(7).unwrap(), "x", 2, MonomialOrder::Grevlex).unwrap();
    let pts = rational_points_zero_dim(&ideal(&r7, &["x_0^2 + x_1^2"])).unwrap();
    assert!(pts.points.is_empty());
    assert_eq!(pts.unresolved_degree, 2);
}
