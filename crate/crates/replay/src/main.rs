use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use projgeom::modfield::DEFAULT_PRIME;
use projgeom::varmap::ImageStrategy;
use replay::{run_scenario, Config};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scenario {
    Code1,
    Code2,
    Lemma,
    Chain,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Strategy {
    Interpolation,
    Elimination,
    Auto,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Replays the computations and prints a report of every check.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    #[arg(long, value_enum)]
    scenario: Scenario,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Strategy::Interpolation)]
    strategy: Strategy,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Threads for `--scenario all`.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Record wall-clock step timings (makes the report nondeterministic).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let a = Args::parse();
    let cfg = Config {
        prime: a.prime,
        seed: a.seed,
        strategy: match a.strategy {
            Strategy::Interpolation => ImageStrategy::Interpolation,
            Strategy::Elimination => ImageStrategy::Elimination,
            Strategy::Auto => ImageStrategy::Auto,
        },
        timings: a.timings,
        jobs: a.jobs.max(1),
    };
    let name = format!("{:?}", a.scenario).to_lowercase();
    let report = match run_scenario(&name, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match a.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &a.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(c) => {
            eprintln!("failed check: {}", c.name);
            ExitCode::FAILURE
        }
    }
}
