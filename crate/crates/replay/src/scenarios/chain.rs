//! Three quadratic transformations taking the plane section of the sextics
//! to the cubics through the vertices of a complete quadrilateral.

use std::time::Instant;

use projgeom::cremona::{
    canonical_class, class_sum, parse_chain, run_chain, sigma_bullet, DivisorClass, PlaneLinearSystem,
};
use projgeom::groebner::{hilbert_data, intersect, Ideal};
use projgeom::polyring::{MonomialOrder, RingDescriptor};
use projgeom::Result;

use crate::fixtures;
use crate::geometry::edges;
use crate::report::Ctx;
use crate::scenarios::code2::{cubic_surface, hyperplane_section};

const VERTICES: [&str; 6] = ["A01", "A02", "A03", "A12", "A13", "A23"];

/// Sextics triple at `p` and double at the six vertices.
pub fn initial_system() -> Result<PlaneLinearSystem> {
    let mut m = vec![("p".to_string(), 3)];
    m.extend(VERTICES.iter().map(|v| (v.to_string(), 2)));
    PlaneLinearSystem::new(6, m)
}

/// Multiplicities after each step, as `label@m` sorted by label.
fn block(l: &PlaneLinearSystem) -> String {
    let mut v: Vec<String> = l.mults().iter().filter(|(_, m)| *m > 0).map(|(n, m)| format!("{n}@{m}")).collect();
    v.sort();
    format!("{}; {}", l.degree(), v.join(" "))
}

fn expected_block(d: i64, double: &[&str], simple: &[&str]) -> String {
    let mut v: Vec<String> = double.iter().map(|n| format!("{n}@2")).collect();
    v.extend(simple.iter().map(|n| format!("{n}@1")));
    v.sort();
    format!("{d}; {}", v.join(" "))
}

pub fn run(ctx: &mut Ctx) -> Result<()> {
    let t = Instant::now();
    let steps = parse_chain(fixtures::CHAIN)?;
    let trace = run_chain(&initial_system()?, &steps)?;
    let elapsed = t.elapsed().as_secs_f64();

    let degs: Vec<String> = trace.degrees().iter().map(|d| d.to_string()).collect();
    ctx.check_eq("degree_trace", "6,5,4,3", degs.join(","));
    let want = [
        expected_block(5, &["p'", "B23", "B13", "B01", "B02"], &["B12", "B03"]),
        expected_block(4, &["C13", "C02"], &["p''", "C23", "C12", "C01", "C03"]),
        expected_block(3, &[], &["D01", "D02", "D03", "D12", "D13", "D23"]),
    ];
    for (k, w) in want.iter().enumerate() {
        ctx.check_eq(&format!("step_{}_system", k + 1), w, block(&trace.systems[k + 1]));
    }
    let invs: Vec<String> = trace
        .invariants()
        .iter()
        .map(|i| format!("{:?}", i.triple()))
        .collect();
    let constant = trace.invariants().iter().all(|i| i.triple() == (3, 3, 1));
    ctx.check("invariant_trace", "(3, 3, 1) at every step", invs.join(" "), constant);
    ctx.check(
        "chain_runtime",
        "< 1 s",
        if elapsed < 1.0 { "< 1 s" } else { ">= 1 s" },
        elapsed < 1.0,
    );

    // The same numbers from the polynomial side.
    let (prime, seed, strategy) = (ctx.prime, ctx.seed, ctx.strategy);
    let cs = ctx.timed("image_nu_bullet", || cubic_surface(prime, seed, strategy))?;
    let deg = hilbert_data(&cs.image)?.dim_degree().1;
    let si = trace.last().degree().pow(2) - trace.last().mults().iter().map(|(_, m)| m * m).sum::<i64>();
    ctx.check("self_intersection_is_image_degree", si, deg, si == deg as i64 && si == 3);
    let (g, smooth) = hyperplane_section(&cs.image, ctx.seed)?;
    let genus = trace.invariants().last().map(|i| i.virtual_genus).unwrap_or(-1);
    ctx.check(
        "genus_one_is_smooth_plane_cubic",
        "genus 1, smooth cubic section",
        format!("genus {genus}, section degree {}{}", g.degree().unwrap_or(0), if smooth { " smooth" } else { " singular" }),
        genus == 1 && smooth && g.degree() == Some(3),
    );

    // Divisor classes on the blow-up.
    let sum = class_sum(&canonical_class(), &sigma_bullet())?;
    let mut terms = vec![("H", 2), ("Ep", -1)];
    terms.extend(["E0", "E1", "E2", "E3"].map(|e| (e, -1)));
    terms.extend(["F01", "F02", "F03", "F12", "F13", "F23"].map(|f| (f, -1)));
    let want = DivisorClass::blowup(&terms)?;
    ctx.check("canonical_plus_sigma", &want, &sum, sum == want);
    let s = RingDescriptor::indexed(projgeom::modfield::PrimeField::new(ctx.prime as u64)?, "s", 4, MonomialOrder::Grevlex)?;
    let mut all = Ideal::unit(&s);
    for (_, e) in edges(&s) {
        all = intersect(&all, &e)?;
    }
    let quadrics = 10 - hilbert_data(&all)?.hilbert_function(2) as i64;
    ctx.check_eq("quadrics_through_edges", 0, quadrics);
    Ok(())
}
