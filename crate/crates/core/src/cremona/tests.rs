use super::*;
use crate::error::Error;

const CHAIN: &str = "\
# comment
centers: p,A12,A03 ; relabel: p=p',A12=B12,A03=B03,A23=B23,A13=B13,A01=B01,A02=B02
centers: p',B23,B01 ; relabel: p'=p'',B23=C23,B01=C01,B12=C12,B03=C03,B13=C13,B02=C02

centers: p'',C13,C02 ; relabel: p''=p''',C13=D13,C02=D02,C12=D12,C03=D03,C23=D23,C01=D01
";

fn sextics() -> PlaneLinearSystem {
    PlaneLinearSystem::new(
        6,
        [("p", 3), ("A12", 2), ("A03", 2), ("A23", 2), ("A13", 2), ("A01", 2), ("A02", 2)],
    )
    .unwrap()
}

fn relabel(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn entries(l: &PlaneLinearSystem) -> Vec<(&str, i64)> {
    let mut v: Vec<(&str, i64)> = l.mults().iter().map(|(s, m)| (s.as_str(), *m)).collect();
    v.sort();
    v
}

#[test]
fn first_transform_gives_quintics() {
    let r = relabel(&[
        ("p", "p'"),
        ("A12", "B12"),
        ("A03", "B03"),
        ("A23", "B23"),
        ("A13", "B13"),
        ("A01", "B01"),
        ("A02", "B02"),
    ]);
    let q = quadratic_transform(&sextics(), ["p", "A12", "A03"], &r).unwrap();
    assert_eq!(q.degree(), 5);
    let mut want = vec![
        ("p'", 2),
        ("B12", 1),
        ("B03", 1),
        ("B23", 2),
        ("B13", 2),
        ("B01", 2),
        ("B02", 2),
    ];
    want.sort();
    assert_eq!(entries(&q), want);
}

#[test]
fn second_transform_gives_quartics() {
    let steps = parse_chain(CHAIN).unwrap();
    let trace = run_chain(&sextics(), &steps[..2]).unwrap();
    let mut want = vec![
        ("C13", 2),
        ("C02", 2),
        ("p''", 1),
        ("C23", 1),
        ("C12", 1),
        ("C01", 1),
        ("C03", 1),
    ];
    want.sort();
    assert_eq!(trace.last().degree(), 4);
    assert_eq!(entries(trace.last()), want);
}

#[test]
fn lines_become_conics() {
    let l = PlaneLinearSystem::new(1, [("a", 0), ("b", 0), ("c", 0)]).unwrap();
    let q = quadratic_transform(&l, ["a", "b", "c"], &[]).unwrap();
    assert_eq!(q.degree(), 2);
    assert_eq!(q.pattern(), vec![1, 1, 1]);
}

#[test]
fn transform_errors() {
    let l = sextics();
    assert_eq!(
        quadratic_transform(&l, ["p", "p", "A12"], &[]),
        Err(Error::RepeatedCenters)
    );
    assert_eq!(
        quadratic_transform(&l, ["p", "A12", "X"], &[]),
        Err(Error::MissingLabel("X".into()))
    );
    assert!(PlaneLinearSystem::new(2, [("a", 1), ("a", 1)]).is_err());
    assert!(PlaneLinearSystem::new(2, [("a", -1)]).is_err());
}

#[test]
fn invariant_examples() {
    assert_eq!(system_invariants(&sextics()).triple(), (3, 3, 1));
    let cubics = PlaneLinearSystem::new(3, (0..6).map(|i| (format!("v{i}"), 1))).unwrap();
    assert_eq!(system_invariants(&cubics).triple(), (3, 3, 1));
    for d in 0..8i64 {
        let l = PlaneLinearSystem::new(d, Vec::<(String, i64)>::new()).unwrap();
        assert_eq!(
            system_invariants(&l).triple(),
            (d * d, 3 * d, (d - 1) * (d - 2) / 2)
        );
    }
}

#[test]
fn chain_trace() {
    let steps = parse_chain(CHAIN).unwrap();
    assert_eq!(steps.len(), 3);
    let trace = run_chain(&sextics(), &steps).unwrap();
    assert_eq!(trace.degrees(), vec![6, 5, 4, 3]);
    for inv in trace.invariants() {
        assert_eq!(inv.triple(), (3, 3, 1));
    }
    let last = trace.last();
    assert_eq!(last.mult("p'''"), Some(0));
    for l in ["D12", "D03", "D23", "D13", "D01", "D02"] {
        assert_eq!(last.mult(l), Some(1), "{l}");
    }
    let empty = run_chain(&sextics(), &[]).unwrap();
    assert_eq!(empty.systems, vec![sextics()]);
}

#[test]
fn chain_parse_errors() {
    assert!(matches!(parse_chain("centers: a,b"), Err(Error::Parse { .. })));
    assert!(matches!(parse_chain("x\ncenter a,b,c"), Err(Error::Parse { pos: 0, .. })));
    assert!(matches!(
        parse_chain("centers: a,b,c ; relabel a=b"),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_chain("centers: a,b,c ; relabel: ab"),
        Err(Error::Parse { .. })
    ));
    let s = parse_chain("centers: a, b ,c ; relabel:").unwrap();
    assert_eq!(s[0].centers, ["a".to_string(), "b".into(), "c".into()]);
    assert!(s[0].relabel.is_empty());
}

#[test]
fn display() {
    let l = PlaneLinearSystem::new(2, [("a", 1), ("b", 0)]).unwrap();
    assert_eq!(l.to_string(), "(2; 1@a, 0@b)");
    let c = DivisorClass::blowup(&[("H", 2), ("Ep", -1), ("F01", 1)]).unwrap();
    assert_eq!(c.to_string(), "2H - Ep + F01");
    assert_eq!(DivisorClass::zero(blowup_basis()).to_string(), "0");
}

#[test]
fn sigma_bullet_as_stored() {
    let s = sigma_bullet();
    assert_eq!(s.coeff("H"), Some(6));
    assert_eq!(s.coeff("Ep"), Some(-3));
    for (stem, k) in [("E", -3), ("E'", -2), ("E''", -2)] {
        for i in 1..=3 {
            assert_eq!(s.coeff(&format!("{stem}{i}")), Some(k));
        }
    }
    assert_eq!(s.coeff("E0"), Some(-3));
    for f in ["F01", "F02", "F03", "F12", "F13", "F23"] {
        assert_eq!(s.coeff(f), Some(-2));
    }
    for r in ["R1", "R2", "R3"] {
        assert_eq!(s.coeff(r), Some(-1));
    }
    let k = canonical_class();
    assert_eq!(k.coeff("H"), Some(-4));
    assert_eq!(k.coeff("E''2"), Some(2));
    assert_eq!(k.coeff("R3"), Some(1));
}

#[test]
fn canonical_plus_sigma() {
    let sum = class_sum(&canonical_class(), &sigma_bullet()).unwrap();
    let mut want = vec![("H", 2), ("Ep", -1)];
    for e in ["E0", "E1", "E2", "E3", "F01", "F02", "F03", "F12", "F13", "F23"] {
        want.push((e, -1));
    }
    assert_eq!(sum, DivisorClass::blowup(&want).unwrap());
    for n in ["E'1", "E'2", "E'3", "E''1", "E''2", "E''3", "R1", "R2", "R3"] {
        assert_eq!(sum.coeff(n), Some(0));
    }
}

#[test]
fn class_sum_identity_and_mismatch() {
    let a = sigma_bullet();
    assert_eq!(class_sum(&a, &DivisorClass::zero(blowup_basis())).unwrap(), a);
    let other = DivisorClass::new(["H".to_string()].into_iter().collect(), vec![1]).unwrap();
    assert_eq!(class_sum(&a, &other), Err(Error::BasisMismatch));
    assert!(DivisorClass::new(blowup_basis(), vec![0; 3]).is_err());
    assert!(DivisorClass::blowup(&[("Q", 1)]).is_err());
}
