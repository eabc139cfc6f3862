//! Randomized suites checking the Groebner engine against oracles that
//! share none of its code: plain division, linear algebra on truncated
//! degree pieces, and brute-force lowest forms.

use std::collections::BTreeMap;

use projgeom::groebner::{cone_at_origin, ideals_equal, saturate_irrelevant, saturate_poly, Ideal};
use projgeom::modfield::{FMatrix, PrimeField};
use projgeom::polyring::{Monomial, MonomialOrder, Polynomial, Ring, RingDescriptor};
use projgeom::varmap::{monomials_of_degree, rng_for};
use projgeom::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Ideals in the S-pair and membership corpus.
pub const GB_CASES: usize = 200;
/// Ideals in the tangent cone corpus.
pub const TANGENT_CASES: usize = 50;
/// Ideals in the saturation corpus.
pub const SATURATION_CASES: usize = 50;
/// Truncation degree of the linear-algebra oracles.
pub const ORACLE_DEGREE: u32 = 6;
/// Tangent cone pieces are compared in full up to this degree.
pub const TANGENT_COMPARE_DEGREE: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing case, if any.
    pub detail: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: 0,
            detail: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, min_deg: u32, homog: Option<u32>) -> Polynomial {
    let n = ring.nvars();
    let f = ring.field();
    let mut p = Polynomial::zero(ring);
    let terms = rng.gen_range(1..=4);
    for _ in 0..terms {
        let d = homog.unwrap_or_else(|| rng.gen_range(min_deg..=max_deg));
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = rng.gen_range(1..f.modulus());
        p = p.add_scaled(&Polynomial::monomial(ring, Monomial::from_exps(&e), 1), c);
    }
    p
}

struct Case {
    ideal: Ideal,
    homogeneous: bool,
}

fn random_case(rng: &mut ChaCha8Rng, field: PrimeField, homogeneous: bool, min_deg: u32) -> Result<Case> {
    let n = rng.gen_range(1..=3);
    let order = match rng.gen_range(0..3) {
        0 => MonomialOrder::Lex,
        1 => MonomialOrder::Grevlex,
        _ => MonomialOrder::WeightedGraded((1..=n as u32).collect()),
    };
    let ring = RingDescriptor::indexed(field, "x", n, order)?;
    let k = rng.gen_range(1..=3);
    let gens = (0..k)
        .map(|_| {
            let h = homogeneous.then(|| rng.gen_range(min_deg.max(1)..=3));
            random_poly(rng, &ring, 3, min_deg, h)
        })
        .filter(|g| !g.is_zero())
        .collect();
    Ok(Case {
        ideal: Ideal::new(&ring, gens),
        homogeneous,
    })
}

/// Textbook multivariate division; returns the remainder.
pub fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let mut p = f.clone();
    let mut r = Polynomial::zero(ring);
    while let Some(&(m, c)) = p.lead_term() {
        let hit = divisors
            .iter()
            .find_map(|g| g.lead_monomial().and_then(|lm| lm.quotient_of(&m).map(|q| (g, q))));
        match hit {
            Some((g, q)) => {
                let k = field.mul(c, field.inv(g.lead_coeff()).expect("nonzero lead"));
                p = p.add_scaled(&g.mul_term(&q, 1), field.neg(k));
            }
            None => {
                let t = Polynomial::monomial(ring, m, c);
                r = r.add_scaled(&t, 1);
                p = p.add_scaled(&t, field.neg(1));
            }
        }
    }
    r
}

pub fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field();
    let (mf, mg) = (f.lead_monomial().unwrap(), g.lead_monomial().unwrap());
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient_of(&l).unwrap(), field.inv(f.lead_coeff()).unwrap());
    let b = g.mul_term(&mg.quotient_of(&l).unwrap(), field.inv(g.lead_coeff()).unwrap());
    a.add_scaled(&b, field.neg(1))
}

/// Every S-polynomial of the computed basis and every input generator
/// divides to zero by plain division.
pub fn s_pair_certificate(seed: u64) -> Result<SuiteResult> {
    let mut out = SuiteResult::new("s_pair_certificate");
    let mut rng = rng_for(seed, 40);
    let field = PrimeField::default();
    for i in 0..GB_CASES {
        let case = random_case(&mut rng, field, i % 2 == 0, 0)?;
        let gb = case.ideal.groebner();
        let g = gb.elements();
        let mut ok = case.ideal.gens().iter().all(|f| remainder(f, g).is_zero());
        for a in 0..g.len() {
            for b in a + 1..g.len() {
                ok &= remainder(&s_poly(&g[a], &g[b]), g).is_zero();
            }
        }
        out.record(ok, || format!("case {i}: {}", describe(&case.ideal)));
    }
    Ok(out)
}

fn describe(i: &Ideal) -> String {
    let g: Vec<String> = i.gens().iter().map(|p| p.to_signed_string()).collect();
    format!("({})", g.join(", "))
}

/// Coordinates of polynomials on all monomials of degree `<= d`.
struct Truncation {
    index: BTreeMap<[u8; projgeom::polyring::MAX_VARS], usize>,
    field: PrimeField,
}

impl Truncation {
    fn new(ring: &Ring, d: u32) -> Self {
        let mut index = BTreeMap::new();
        for k in 0..=d {
            for m in monomials_of_degree(ring, k) {
                let n = index.len();
                index.insert(*m.raw(), n);
            }
        }
        Truncation {
            index,
            field: ring.field(),
        }
    }

    fn vector(&self, f: &Polynomial) -> Option<Vec<u32>> {
        let mut v = vec![0; self.index.len()];
        for &(m, c) in f.terms() {
            v[*self.index.get(m.raw())?] = c;
        }
        Some(v)
    }

    fn rank(&self, rows: &[Vec<u32>]) -> usize {
        let data: Vec<u32> = rows.iter().flatten().copied().collect();
        FMatrix::from_rows(self.field, rows.len(), self.index.len(), data)
            .expect("consistent shape")
            .rank()
    }
}

/// All products `m * g` of degree `<= d`, or of degree exactly `d` when
/// `exact` is set.
fn multiples(ideal: &Ideal, d: u32, exact: bool) -> Vec<Polynomial> {
    let ring = ideal.ring();
    let mut out = Vec::new();
    for g in ideal.gens() {
        let dg = g.degree().unwrap_or(0);
        if dg > d {
            continue;
        }
        let lo = if exact { d - dg } else { 0 };
        for k in lo..=d - dg {
            for m in monomials_of_degree(ring, k) {
                out.push(g.mul_term(&m, 1));
            }
        }
    }
    out
}

/// `f` lies in the span of the degree-truncated multiples of the generators.
fn oracle_member(ideal: &Ideal, f: &Polynomial, d: u32, exact: bool) -> bool {
    let t = Truncation::new(ideal.ring(), d);
    let mut rows: Vec<Vec<u32>> = multiples(ideal, d, exact)
        .iter()
        .filter_map(|p| t.vector(p))
        .collect();
    let Some(v) = t.vector(f) else { return false };
    let before = t.rank(&rows);
    rows.push(v);
    t.rank(&rows) == before
}

/// Membership via the basis against the truncated linear-algebra oracle.
/// For homogeneous ideals the oracle in the degree of `f` is exact and the
/// answers must agree. Otherwise a member found by the oracle must be found
/// by the basis, and constructed members must be found by both.
pub fn membership(seed: u64) -> Result<SuiteResult> {
    let mut out = SuiteResult::new("membership");
    let mut rng = rng_for(seed, 40);
    let mut probe = rng_for(seed, 41);
    let field = PrimeField::default();
    for i in 0..GB_CASES {
        let case = random_case(&mut rng, field, i % 2 == 0, 0)?;
        let ideal = &case.ideal;
        let ring = ideal.ring().clone();
        // a constructed member and a random candidate
        let mut member = Polynomial::zero(&ring);
        for g in ideal.gens() {
            let dg = g.degree().unwrap_or(0);
            if case.homogeneous {
                let d = 4u32.saturating_sub(dg);
                member = member.add_scaled(&g.mul_term(&random_monomial(&ring, d, &mut probe), 1), 1)
                    .add_scaled(&g.mul_term(&random_monomial(&ring, d, &mut probe), 1), 2);
            } else {
                let h = random_poly(&mut probe, &ring, ORACLE_DEGREE.saturating_sub(dg), 0, None);
                member = member.add_scaled(&(&h * g), 1);
            }
        }
        let candidate = if case.homogeneous {
            let d = probe.gen_range(1..=4);
            random_poly(&mut probe, &ring, 4, 0, Some(d))
        } else {
            random_poly(&mut probe, &ring, 4, 0, None)
        };
        let mut ok = true;
        for f in [&member, &candidate] {
            let gb = ideal.contains_poly(f)?;
            let is_member = std::ptr::eq(f, &member);
            ok &= if case.homogeneous {
                let d = f.degree().unwrap_or(0);
                gb == (f.is_zero() || oracle_member(ideal, f, d, true))
            } else {
                let o = oracle_member(ideal, f, ORACLE_DEGREE, false);
                (!o || gb) && (!is_member || (o && gb))
            };
        }
        out.record(ok, || format!("case {i}: {}", describe(ideal)));
    }
    Ok(out)
}

fn random_monomial(ring: &Ring, d: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let ms = monomials_of_degree(ring, d);
    ms[rng.gen_range(0..ms.len())]
}

/// Lowest forms of the span of truncated multiples, by degree. Columns run
/// through monomials by ascending degree, so after row reduction the pivot
/// of each row sits in its lowest degree.
fn brute_force_lowest_forms(ideal: &Ideal, d: u32) -> BTreeMap<u32, Vec<Polynomial>> {
    let ring = ideal.ring();
    let t = Truncation::new(ring, d);
    let rows: Vec<Vec<u32>> = multiples(ideal, d, false)
        .iter()
        .filter_map(|p| t.vector(p))
        .collect();
    let mut monos: Vec<Monomial> = Vec::with_capacity(t.index.len());
    for k in 0..=d {
        monos.extend(monomials_of_degree(ring, k));
    }
    let mut out: BTreeMap<u32, Vec<Polynomial>> = BTreeMap::new();
    if rows.is_empty() {
        return out;
    }
    let data: Vec<u32> = rows.iter().flatten().copied().collect();
    let m = FMatrix::from_rows(t.field, rows.len(), monos.len(), data).expect("shape");
    let rr = m.row_reduce();
    for (r, &pc) in rr.pivots.iter().enumerate() {
        let k = monos[pc].degree();
        let row = rr.reduced.row(r);
        let mut lf = Polynomial::zero(ring);
        for (c, &v) in row.iter().enumerate() {
            if v != 0 && monos[c].degree() == k {
                lf = lf.add_scaled(&Polynomial::monomial(ring, monos[c], 1), v);
            }
        }
        out.entry(k).or_default().push(lf);
    }
    out
}

/// Dimension of the degree-`k` piece of a homogeneous ideal.
fn graded_dim(i: &Ideal, k: u32) -> usize {
    let gb = i.groebner();
    let leads = gb.lead_monomials();
    monomials_of_degree(i.ring(), k)
        .iter()
        .filter(|m| leads.iter().any(|l| l.divides(m)))
        .count()
}

/// Tangent cone at the origin against brute-force lowest forms: every
/// lowest form lies in the cone, and the pieces agree up to
/// [`TANGENT_COMPARE_DEGREE`].
pub fn tangent_cones(seed: u64) -> Result<SuiteResult> {
    let mut out = SuiteResult::new("tangent_cone");
    let mut rng = rng_for(seed, 42);
    let field = PrimeField::default();
    for i in 0..TANGENT_CASES {
        let case = random_case(&mut rng, field, false, 1)?;
        let ideal = &case.ideal;
        let cone = cone_at_origin(ideal)?;
        let lf = brute_force_lowest_forms(ideal, ORACLE_DEGREE);
        let mut ok = cone.is_homogeneous();
        for forms in lf.values() {
            for f in forms {
                ok &= cone.contains_poly(f)?;
            }
        }
        for k in 0..=TANGENT_COMPARE_DEGREE {
            let brute = lf.get(&k).map_or(0, |v| v.len());
            ok &= brute == graded_dim(&cone, k);
        }
        out.record(ok, || format!("case {i}: {}", describe(ideal)));
    }
    Ok(out)
}

/// Saturating twice changes nothing, by a random form and by the
/// irrelevant ideal, and saturation only grows the ideal.
pub fn saturation_idempotence(seed: u64) -> Result<SuiteResult> {
    let mut out = SuiteResult::new("saturation_idempotence");
    let mut rng = rng_for(seed, 43);
    let field = PrimeField::default();
    for i in 0..SATURATION_CASES {
        let case = random_case(&mut rng, field, true, 1)?;
        let ideal = &case.ideal;
        let ring = ideal.ring().clone();
        let d = rng.gen_range(1..=2);
        let f = random_poly(&mut rng, &ring, d, 0, Some(d));
        let mut ok = true;
        if !f.is_zero() {
            let once = saturate_poly(ideal, &f)?;
            let twice = saturate_poly(&once, &f)?;
            ok &= ideals_equal(&once, &twice)?;
            ok &= ideal.gens().iter().map(|g| once.contains_poly(g)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
        }
        let once = saturate_irrelevant(ideal)?;
        let twice = saturate_irrelevant(&once)?;
        ok &= ideals_equal(&once, &twice)?;
        out.record(ok, || format!("case {i}: {}", describe(ideal)));
    }
    Ok(out)
}

/// All engine suites in a fixed order.
pub fn run_all(seed: u64) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        s_pair_certificate(seed)?,
        membership(seed)?,
        tangent_cones(seed)?,
        saturation_idempotence(seed)?,
    ])
}
