use projgeom::varmap::ImageStrategy;
use replay::{run_scenario, Config};

fn cfg(prime: u32, seed: u64) -> Config {
    Config {
        prime,
        seed,
        ..Config::default()
    }
}

#[test]
fn unknown_scenario_is_an_error() {
    assert!(run_scenario("code3", &Config::default()).is_err());
}

#[test]
fn parallel_all_matches_serial() {
    let serial = run_scenario("all", &cfg(10_000_019, 5)).unwrap();
    let parallel = run_scenario("all", &Config { jobs: 4, ..cfg(10_000_019, 5) }).unwrap();
    assert_eq!(serial.to_json(), parallel.to_json());
}

#[test]
fn other_prime_skips_coefficient_checks() {
    let r = run_scenario("code2", &cfg(32_003, 1)).unwrap();
    assert!(r.pass, "{}", r.to_text());
    let c = r.check("family_equation").unwrap();
    assert_eq!(c.expected, "skipped");
    // structural checks still run
    assert_eq!(r.check("nodes_count").unwrap().actual, "4");
}

#[test]
fn elimination_strategy_passes_code2() {
    let r = run_scenario(
        "code2",
        &Config {
            strategy: ImageStrategy::Elimination,
            ..Config::default()
        },
    )
    .unwrap();
    assert!(r.pass, "{}", r.to_text());
    assert!(r.check("image_agrees_with_interpolation").unwrap().pass);
}

#[test]
fn lemma_holds_for_other_seeds() {
    for seed in [11, 12] {
        let r = run_scenario("lemma", &cfg(10_000_019, seed)).unwrap();
        assert!(r.pass, "{}", r.to_text());
    }
}

#[test]
fn non_checks_are_recorded() {
    let r = run_scenario("code2", &Config::default()).unwrap();
    for n in ["cayley_normal_form", "associated_primes_substitution"] {
        let c = r.check(n).unwrap();
        assert_eq!(c.expected, "not checked");
        assert!(c.pass);
    }
}
