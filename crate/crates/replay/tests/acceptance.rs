//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use replay::{engine, run_scenario, Config, Report};

const CODE1_BUDGET: Duration = Duration::from_secs(5 * 60);
const CODE2_BUDGET: Duration = Duration::from_secs(2 * 60);
const CHAIN_BUDGET: Duration = Duration::from_secs(1);
const LEMMA_MIN_SEEDS: u64 = 20;
const ENGINE_SEED: u64 = 7;
const DETERMINISM_SEED: &str = "7";

struct Outcome {
    pass: bool,
    note: String,
}

fn run(name: &str) -> (Report, Duration) {
    let t = Instant::now();
    let r = run_scenario(name, &Config::default()).expect("known scenario");
    (r, t.elapsed())
}

/// All named checks exist and pass; the note names the first one that does not.
fn require(r: &Report, names: &[&str]) -> Outcome {
    for n in names {
        match r.check(n) {
            None => return Outcome { pass: false, note: format!("missing check {}/{n}", r.scenario) },
            Some(c) if !c.pass => {
                return Outcome {
                    pass: false,
                    note: format!("{}/{n}: expected {}, got {}", r.scenario, c.expected, c.actual),
                }
            }
            _ => {}
        }
    }
    if let Some(c) = r.first_failure() {
        return Outcome { pass: false, note: format!("{}/{} failed", r.scenario, c.name) };
    }
    Outcome { pass: true, note: format!("{} checks", names.len()) }
}

fn within(o: Outcome, took: Duration, budget: Duration) -> Outcome {
    let secs = took.as_secs_f64();
    if took > budget {
        return Outcome { pass: false, note: format!("{secs:.2} s exceeds {} s", budget.as_secs_f64()) };
    }
    Outcome { note: format!("{}, {secs:.2} s", o.note), ..o }
}

fn criterion_1(code1: &Report, took: Duration) -> Outcome {
    let o = require(code1, &["image_equals_42_quadrics", "quadrics_in_image", "dim_degree_W", "image_certificate_pi", "toric_cross_check"]);
    within(o, took, CODE1_BUDGET)
}

fn criterion_2(code1: &Report) -> Outcome {
    require(
        code1,
        &[
            "image_rho_W_equals_Q",
            "dim_degree_Q",
            "image_q_equals_Q",
            "rho_W_birational",
            "q_inverse_matches",
            "q_inverse_identity",
            "composed_map_matches",
            "nu_matches_14_sextics",
            "nu_identity_exact",
            "nu_fixes_100_samples",
        ],
    )
}

fn criterion_3(code2: &Report, took: Duration) -> Outcome {
    let mut names = vec![
        "condition_rank",
        "surviving_parameters",
        "family_equation",
        "image_dim_degree",
        "image_generators",
        "singular_locus_dim_degree",
        "nodes_count",
        "node_types",
        "fiber_dim_degree",
        "fiber_contains_p",
        "fiber_node_at_p",
        "tangent_cone_equation",
        "tangent_cone_base_points",
    ];
    let edges = ["01", "02", "03", "12", "13", "23"].map(|e| format!("fiber_meets_edge_{e}"));
    names.extend(edges.iter().map(String::as_str));
    within(require(code2, &names), took, CODE2_BUDGET)
}

fn criterion_4(code2: &Report) -> Outcome {
    require(code2, &["base_locus_in_edges_and_r", "base_locus_residual_dim"])
}

fn criterion_5(lemma: &Report) -> Outcome {
    let o = require(lemma, &["nodal_cubic_unique", "control_six_general_points"]);
    let seeds = lemma
        .check("nodal_cubic_unique")
        .map_or(0, |c| c.actual.split(',').filter(|d| *d == "0").count() as u64);
    if o.pass && seeds < LEMMA_MIN_SEEDS {
        return Outcome { pass: false, note: format!("only {seeds} seeds") };
    }
    Outcome { note: format!("{}, {seeds} seeds", o.note), ..o }
}

fn criterion_6(chain: &Report, took: Duration) -> Outcome {
    let o = require(
        chain,
        &[
            "degree_trace",
            "step_1_system",
            "step_2_system",
            "step_3_system",
            "invariant_trace",
            "chain_runtime",
            "self_intersection_is_image_degree",
            "genus_one_is_smooth_plane_cubic",
        ],
    );
    within(o, took, CHAIN_BUDGET)
}

fn criterion_7(reports: &[&Report]) -> Outcome {
    let suites = match engine::run_all(ENGINE_SEED) {
        Ok(s) => s,
        Err(e) => return Outcome { pass: false, note: format!("engine error: {e}") },
    };
    let mut notes = Vec::new();
    for s in &suites {
        if !s.passed() {
            return Outcome {
                pass: false,
                note: format!("{}: {} of {} failed, first {}", s.name, s.failures, s.cases, s.detail.clone().unwrap_or_default()),
            };
        }
        notes.push(format!("{} {}", s.name, s.cases));
    }
    let mut certs = 0;
    for r in reports {
        for c in r.checks.iter().filter(|c| c.name.contains("certificate")) {
            if !c.pass {
                return Outcome { pass: false, note: format!("{}/{} failed", r.scenario, c.name) };
            }
            certs += 1;
        }
    }
    Outcome { pass: true, note: format!("{}, {certs} image certificates", notes.join(", ")) }
}

fn criterion_8() -> Outcome {
    let once = || {
        Command::new(env!("CARGO_BIN_EXE_replay"))
            .args(["--scenario", "all", "--seed", DETERMINISM_SEED])
            .output()
            .expect("replay binary runs")
    };
    let (a, b) = (once(), once());
    if !a.status.success() || !b.status.success() {
        return Outcome { pass: false, note: format!("exit status {} / {}", a.status, b.status) };
    }
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    Outcome {
        pass: same,
        note: if same { format!("{} identical bytes", a.stdout.len()) } else { "reports differ".into() },
    }
}

fn main() -> ExitCode {
    let (code1, t1) = run("code1");
    let (code2, t2) = run("code2");
    let (lemma, _) = run("lemma");
    let (chain, t6) = run("chain");
    let results = [
        criterion_1(&code1, t1),
        criterion_2(&code1),
        criterion_3(&code2, t2),
        criterion_4(&code2),
        criterion_5(&lemma),
        criterion_6(&chain, t6),
        criterion_7(&[&code1, &code2, &lemma, &chain]),
        criterion_8(),
    ];
    let mut ok = true;
    for (i, o) in results.iter().enumerate() {
        println!("criterion {}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.note);
        ok &= o.pass;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
