use projgeom::groebner::{
    contains, eliminate, hilbert_dim_degree, ideals_equal, saturate, saturate_poly, Ideal,
};
use projgeom::modfield::PrimeField;
use projgeom::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingDescriptor};
use proptest::prelude::*;

fn field() -> PrimeField {
    PrimeField::new(10000019).unwrap()
}

fn ring(n: usize, order: MonomialOrder) -> Ring {
    RingDescriptor::indexed(field(), "x", n, order).unwrap()
}

/// Exponents and coefficients of one polynomial; homogeneous of degree `d`
/// when `homog`, else of degree at most `d`.
fn raw_poly(n: usize, d: u32, homog: bool) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    let mono = prop::collection::vec(0..=d, n).prop_map(move |mut e| {
        let mut s: u32 = e.iter().sum();
        // lower exponents until the degree bound holds
        let mut k = 0;
        while s > d {
            if e[k % n] > 0 {
                e[k % n] -= 1;
                s -= 1;
            }
            k += 1;
        }
        if homog {
            e[n - 1] += d - s;
        }
        e
    });
    prop::collection::vec((mono, 1u32..10000019), 1..5)
}

fn build(r: &Ring, raw: &[(Vec<u32>, u32)]) -> Polynomial {
    Polynomial::from_terms(r, raw.iter().map(|(e, c)| (Monomial::from_exps(e), *c)).collect())
}

fn raw_ideal(homog: bool) -> impl Strategy<Value = (usize, Vec<Vec<(Vec<u32>, u32)>>)> {
    (1usize..=3).prop_flat_map(move |n| {
        let gens = prop::collection::vec((1u32..=3).prop_flat_map(move |d| raw_poly(n, d, homog)), 1..=3);
        (Just(n), gens)
    })
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex)]
}

/// Plain multivariate division, independent of the engine's reducer.
fn remainder(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let field = f.field();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.ring());
    while let Some(&(m, c)) = p.lead_term() {
        let div = basis.iter().find(|g| g.lead_monomial().unwrap().divides(&m));
        match div {
            Some(g) => {
                let q = g.lead_monomial().unwrap().quotient_of(&m).unwrap();
                let k = field.mul(c, field.inv(g.lead_coeff()).unwrap());
                p = p.add_scaled(&g.mul_term(&q, 1), field.neg(k));
            }
            None => {
                let t = Polynomial::monomial(f.ring(), m, c);
                rem = &rem + &t;
                p = &p - &t;
            }
        }
    }
    rem
}

fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.lead_monomial().unwrap(), g.lead_monomial().unwrap());
    let l = lf.lcm(&lg);
    let field = f.field();
    let a = f.mul_term(&lf.quotient_of(&l).unwrap(), field.inv(f.lead_coeff()).unwrap());
    let b = g.mul_term(&lg.quotient_of(&l).unwrap(), field.inv(g.lead_coeff()).unwrap());
    &a - &b
}

/// `I : f^∞` by adjoining `u` with `u f − 1` and eliminating `u`.
fn rabinowitsch(i: &Ideal, f: &Polynomial) -> Ideal {
    let r = i.ring();
    let mut names = vec!["u_aux".to_string()];
    names.extend(r.vars().iter().cloned());
    let big = RingDescriptor::new(r.field(), names, MonomialOrder::Grevlex).unwrap();
    let map: Vec<usize> = (1..=r.nvars()).collect();
    let mut gens: Vec<Polynomial> = i.gens().iter().map(|g| g.permute_into(&big, &map)).collect();
    let fu = &f.permute_into(&big, &map) * &Polynomial::var(&big, 0);
    gens.push(&fu - &Polynomial::one(&big));
    let e = eliminate(&Ideal::new(&big, gens), &[0]).unwrap();
    let back: Vec<usize> = std::iter::once(0).chain(0..r.nvars()).collect();
    Ideal::new(r, e.gens().iter().map(|g| g.permute_into(r, &back)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn buchberger_certificate((n, gens) in raw_ideal(false), o in orders()) {
        let r = ring(n, o);
        let i = Ideal::new(&r, gens.iter().map(|g| build(&r, g)).collect());
        let gb = i.groebner();
        let el = gb.elements();
        for a in 0..el.len() {
            for b in a + 1..el.len() {
                prop_assert!(remainder(&s_poly(&el[a], &el[b]), el).is_zero());
            }
        }
        for g in i.gens() {
            prop_assert!(remainder(g, el).is_zero());
        }
    }

    #[test]
    fn reduced_basis_ignores_presentation((n, gens) in raw_ideal(true), mult in raw_poly(3, 1, false)) {
        let r = ring(n, MonomialOrder::Grevlex);
        let g: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let i = Ideal::new(&r, g.clone());
        // append a combination and reverse the list
        let m = build(&ring(3, MonomialOrder::Grevlex), &mult);
        let m = Polynomial::from_terms(&r, m.terms().iter()
            .filter(|t| (n..3).all(|v| t.0.exp(v) == 0)).copied().collect());
        let mut other: Vec<Polynomial> = g.iter().rev().cloned().collect();
        other.push(&(&g[0] * &m) + &g[g.len() - 1]);
        let j = Ideal::new(&r, other);
        let (ri, rj) = (i.reduced(), j.reduced());
        prop_assert_eq!(ri.gens(), rj.gens());
    }

    #[test]
    fn elimination_is_sound((n, gens) in raw_ideal(false)) {
        prop_assume!(n >= 2);
        let r = ring(n, MonomialOrder::Grevlex);
        let i = Ideal::new(&r, gens.iter().map(|g| build(&r, g)).collect());
        let e = eliminate(&i, &[0]).unwrap();
        for g in e.gens() {
            prop_assert_eq!(g.degree_in(0), 0);
            prop_assert!(i.contains_poly(g).unwrap());
        }
    }

    #[test]
    fn saturation_is_idempotent((n, gens) in raw_ideal(true), pick in 0usize..4) {
        let r = ring(n, MonomialOrder::Grevlex);
        let i = Ideal::new(&r, gens.iter().map(|g| build(&r, g)).collect());
        let j = match pick {
            0 => Ideal::irrelevant(&r),
            1 => Ideal::new(&r, vec![Polynomial::var(&r, 0)]),
            2 => Ideal::new(&r, vec![&Polynomial::var(&r, 0) + &Polynomial::var(&r, n - 1)]),
            _ => Ideal::new(&r, vec![&Polynomial::var(&r, 0) * &Polynomial::var(&r, n - 1)]),
        };
        let s = saturate(&i, &j).unwrap();
        prop_assert!(contains(&s, &i).unwrap());
        prop_assert!(ideals_equal(&saturate(&s, &j).unwrap(), &s).unwrap());
    }

    #[test]
    fn saturation_matches_rabinowitsch((n, gens) in raw_ideal(true), pick in 0usize..3) {
        let r = ring(n, MonomialOrder::Grevlex);
        let i = Ideal::new(&r, gens.iter().map(|g| build(&r, g)).collect());
        let x0 = Polynomial::var(&r, 0);
        let xl = Polynomial::var(&r, n - 1);
        let f = match pick {
            0 => x0,
            1 => &x0 * &xl,
            _ => x0.add_scaled(&xl, 3),
        };
        let fast = saturate_poly(&i, &f).unwrap();
        prop_assert!(ideals_equal(&fast, &rabinowitsch(&i, &f)).unwrap());
    }

    #[test]
    fn hypersurface_dim_degree(n in 1usize..=5, d in 1u32..=4, tail in prop::collection::vec(1u32..10000019, 6)) {
        let r = ring(n + 1, MonomialOrder::Grevlex);
        let mut f = Polynomial::var(&r, 0).pow(d);
        for (k, c) in tail.iter().enumerate() {
            let mut e = vec![0u32; n + 1];
            e[k % (n + 1)] += d - 1;
            e[(k * 7 + 1) % (n + 1)] += 1;
            f = f.add_scaled(&Polynomial::monomial(&r, Monomial::from_exps(&e), 1), *c);
        }
        prop_assume!(!f.is_zero() && f.degree() == Some(d));
        let h = Ideal::new(&r, vec![f]);
        prop_assert_eq!(hilbert_dim_degree(&h).unwrap(), (n as i64 - 1, d as u64));
    }
}
