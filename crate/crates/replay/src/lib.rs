//! Replays the two scripted computations `code1` and `code2` together with
//! the geometry of the sextic surfaces through the tetrahedron, one report
//! per scenario.

pub mod engine;
pub mod fixtures;
pub mod geometry;
pub mod report;
pub mod scenarios;

use projgeom::modfield::DEFAULT_PRIME;
use projgeom::varmap::ImageStrategy;

pub use report::{Check, Ctx, Report, Timings};

pub const SCENARIOS: [&str; 4] = ["code1", "code2", "lemma", "chain"];

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub prime: u32,
    pub seed: u64,
    pub strategy: ImageStrategy,
    pub timings: bool,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            prime: DEFAULT_PRIME,
            seed: 0,
            strategy: ImageStrategy::Interpolation,
            timings: false,
            jobs: 1,
        }
    }
}

type Runner = fn(&mut Ctx) -> projgeom::Result<()>;

fn runner(name: &str) -> Option<Runner> {
    Some(match name {
        "code1" => scenarios::code1::run,
        "code2" => scenarios::code2::run,
        "lemma" => scenarios::lemma::run,
        "chain" => scenarios::chain::run,
        _ => return None,
    })
}

/// Runs one scenario, or all of them for `"all"`. An error inside a
/// scenario becomes a failing check rather than aborting the report.
pub fn run_scenario(name: &str, cfg: &Config) -> Result<Report, String> {
    if name == "all" {
        return Ok(run_all(cfg));
    }
    let run = runner(name).ok_or_else(|| format!("unknown scenario `{name}`"))?;
    let mut ctx = Ctx::new(cfg.prime, cfg.seed, cfg.strategy, cfg.timings);
    if let Err(e) = run(&mut ctx) {
        ctx.check("completed", "no error", e.to_string(), false);
    }
    Ok(ctx.finish(name, cfg.strategy.token()))
}

/// All scenarios, check and timing names prefixed by the scenario. With
/// `jobs > 1` they run on separate threads; the output order is fixed.
pub fn run_all(cfg: &Config) -> Report {
    let one = |n: &str| run_scenario(n, cfg).expect("known scenario");
    let reports: Vec<Report> = if cfg.jobs > 1 {
        std::thread::scope(|s| {
            let handles: Vec<_> = SCENARIOS.iter().map(|n| s.spawn(move || one(n))).collect();
            handles.into_iter().map(|h| h.join().expect("scenario thread")).collect()
        })
    } else {
        SCENARIOS.iter().map(|n| one(n)).collect()
    };
    let mut checks = Vec::new();
    let mut timings = Vec::new();
    for r in reports {
        for mut c in r.checks {
            c.name = format!("{}/{}", r.scenario, c.name);
            checks.push(c);
        }
        for (k, v) in r.timings_ms.0 {
            timings.push((format!("{}/{k}", r.scenario), v));
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Report {
        scenario: "all".into(),
        prime: cfg.prime,
        seed: cfg.seed,
        strategy: cfg.strategy.token().into(),
        checks,
        timings_ms: Timings(timings),
        pass,
    }
}
