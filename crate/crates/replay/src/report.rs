use std::fmt::{self, Display};
use std::time::Instant;

use projgeom::groebner::Ideal;
use projgeom::modfield::DEFAULT_PRIME;
use projgeom::varmap::ImageStrategy;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Step timings in insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Timings(pub Vec<(String, f64)>);

impl Serialize for Timings {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub prime: u32,
    pub seed: u64,
    pub strategy: String,
    pub checks: Vec<Check>,
    pub timings_ms: Timings,
    pub pass: bool,
}

impl Report {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "scenario {} prime {} seed {} strategy {}\n",
            self.scenario, self.prime, self.seed, self.strategy
        );
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!("{tag} {}: expected {}, got {}\n", c.name, c.expected, c.actual));
        }
        for (k, v) in &self.timings_ms.0 {
            s.push_str(&format!("time {k}: {v:.1} ms\n"));
        }
        match self.first_failure() {
            None => s.push_str("result: pass\n"),
            Some(c) => s.push_str(&format!("result: FAIL (first failing check: {})\n", c.name)),
        }
        s
    }
}

/// Collects checks and timings while a scenario runs.
pub struct Ctx {
    pub prime: u32,
    pub seed: u64,
    pub strategy: ImageStrategy,
    record_timings: bool,
    checks: Vec<Check>,
    timings: Vec<(String, f64)>,
}

impl Ctx {
    pub fn new(prime: u32, seed: u64, strategy: ImageStrategy, record_timings: bool) -> Self {
        Ctx {
            prime,
            seed,
            strategy,
            record_timings,
            checks: Vec::new(),
            timings: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, expected: impl Display, actual: impl Display, pass: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    /// Passes when both sides print the same.
    pub fn check_eq(&mut self, name: &str, expected: impl Display, actual: impl Display) {
        let (e, a) = (expected.to_string(), actual.to_string());
        let pass = e == a;
        self.check(name, e, a, pass);
    }

    /// Whether coefficient-level comparisons with the vendored data apply.
    pub fn coefficients_apply(&self) -> bool {
        self.prime == DEFAULT_PRIME
    }

    /// A comparison against vendored coefficients; skipped at other primes.
    pub fn coefficient_check(
        &mut self,
        name: &str,
        f: impl FnOnce() -> projgeom::Result<(String, String, bool)>,
    ) -> projgeom::Result<()> {
        if !self.coefficients_apply() {
            self.check(name, "skipped", format!("skipped at p={}", self.prime), true);
            return Ok(());
        }
        let (e, a, pass) = f()?;
        self.check(name, e, a, pass);
        Ok(())
    }

    /// Something deliberately not verified, recorded as such.
    pub fn non_check(&mut self, name: &str, note: &str) {
        self.check(name, "not checked", note, true);
    }

    pub fn timed<T>(&mut self, step: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        if self.record_timings {
            let ms = t.elapsed().as_secs_f64() * 1e3;
            self.timings.push((step.to_string(), (ms * 1e3).round() / 1e3));
        }
        out
    }

    pub fn finish(self, scenario: &str, strategy: &str) -> Report {
        let pass = self.checks.iter().all(|c| c.pass);
        Report {
            scenario: scenario.to_string(),
            prime: self.prime,
            seed: self.seed,
            strategy: strategy.to_string(),
            checks: self.checks,
            timings_ms: Timings(self.timings),
            pass,
        }
    }
}

/// `gb:` and the first 16 hex digits of the SHA-256 of the reduced basis.
pub fn gb_hash(i: &Ideal) -> String {
    let gb = i.groebner();
    let mut h = Sha256::new();
    h.update(i.ring().vars().join(",").as_bytes());
    h.update(b"\n");
    h.update(gb.canonical_text().as_bytes());
    let d = h.finalize();
    let hex: String = d.iter().take(8).map(|b| format!("{b:02x}")).collect();
    format!("gb:{hex}")
}

/// `(a, b)` tuple display.
pub struct Pair<A, B>(pub A, pub B);

impl<A: Display, B: Display> Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}
