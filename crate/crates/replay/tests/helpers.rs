use projgeom::groebner::{hilbert_dim_degree, ideals_equal, Ideal};
use projgeom::modfield::PrimeField;
use projgeom::polyring::{MonomialOrder, Polynomial, RingDescriptor};
use projgeom::varmap::ImageStrategy;
use replay::fixtures;
use replay::geometry::{edges, linear_parametrization, point_p, span_ideal, vertex};
use replay::report::{gb_hash, Ctx};

#[test]
fn span_of_two_points_is_a_line() {
    let f = PrimeField::default();
    let s = RingDescriptor::indexed(f, "s", 4, MonomialOrder::Grevlex).unwrap();
    let p = point_p(f).unwrap();
    let v = vertex(f, 4, 0).unwrap();
    let l = span_ideal(&s, &[p.coords(), v.coords()]).unwrap();
    assert_eq!(hilbert_dim_degree(&l).unwrap(), (1, 1));
    for g in l.gens() {
        assert_eq!(g.eval(p.coords()), 0);
        assert_eq!(g.eval(v.coords()), 0);
    }
}

#[test]
fn linear_parametrization_lands_on_span() {
    let f = PrimeField::default();
    let s = RingDescriptor::indexed(f, "s", 4, MonomialOrder::Grevlex).unwrap();
    let pts = [vertex(f, 4, 1).unwrap(), vertex(f, 4, 2).unwrap(), point_p(f).unwrap()];
    let refs: Vec<&[u32]> = pts.iter().map(|p| p.coords()).collect();
    let l = linear_parametrization(&s, &refs, "u").unwrap();
    let plane = span_ideal(&s, &refs).unwrap();
    for g in plane.gens() {
        assert!(l.pulls_back_to_zero(g).unwrap());
    }
}

#[test]
fn six_edges() {
    let f = PrimeField::default();
    let s = RingDescriptor::indexed(f, "s", 4, MonomialOrder::Grevlex).unwrap();
    let e = edges(&s);
    let names: Vec<&str> = e.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["01", "02", "03", "12", "13", "23"]);
    let want = Ideal::new(&s, vec![Polynomial::var(&s, 1), Polynomial::var(&s, 3)]);
    assert!(ideals_equal(&e[4].1, &want).unwrap());
}

#[test]
fn fixtures_load_at_two_primes() {
    for p in [10_000_019, 32_003] {
        let w = fixtures::ideal(fixtures::W_QUADRICS, p, None).unwrap();
        assert_eq!(w.gens().len(), 42);
        let nu = fixtures::map(fixtures::NU, p, None, None).unwrap();
        assert_eq!((nu.forms().len(), nu.degree()), (14, 6));
        let fam = fixtures::family(fixtures::TRIPLE_POINT_FAMILY, p, None).unwrap();
        assert_eq!(fam.nparams(), 4);
    }
    let s = fixtures::family(fixtures::SEXTIC_FAMILY, 10_000_019, None).unwrap();
    let lines = fixtures::ideal_list(fixtures::LINES_R, 10_000_019, s.geom_ring()).unwrap();
    assert_eq!(lines.len(), 3);
}

#[test]
fn gb_hash_ignores_presentation() {
    let f = PrimeField::default();
    let s = RingDescriptor::indexed(f, "s", 2, MonomialOrder::Grevlex).unwrap();
    let x = Polynomial::var(&s, 0);
    let y = Polynomial::var(&s, 1);
    let a = Ideal::new(&s, vec![x.clone(), y.clone()]);
    let b = Ideal::new(&s, vec![x.add_scaled(&y, 5), y.scale(3)]);
    assert_eq!(gb_hash(&a), gb_hash(&b));
    assert!(gb_hash(&a).starts_with("gb:"));
    assert_eq!(gb_hash(&a).len(), 3 + 16);
}

#[test]
fn coefficient_checks_skip_off_default_prime() {
    let mut ctx = Ctx::new(32_003, 0, ImageStrategy::Interpolation, false);
    let mut called = false;
    ctx.coefficient_check("x", || {
        called = true;
        Ok(("a".into(), "b".into(), false))
    })
    .unwrap();
    assert!(!called);
    let r = ctx.finish("t", "interpolation");
    assert!(r.pass);
    assert_eq!(r.checks[0].actual, "skipped at p=32003");
}
