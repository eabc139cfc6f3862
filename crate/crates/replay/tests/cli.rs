use std::process::Command;

fn replay(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_replay"))
        .args(args)
        .output()
        .expect("replay runs")
}

#[test]
fn json_keys_in_order() {
    let out = replay(&["--scenario", "lemma", "--seed", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // top-level keys are indented by two spaces
    let pos: Vec<usize> = ["scenario", "prime", "seed", "strategy", "checks", "timings_ms", "pass"]
        .iter()
        .map(|k| text.find(&format!("\n  \"{k}\"")).unwrap_or_else(|| panic!("{k} missing")))
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["scenario"], "lemma");
    assert_eq!(v["seed"], 3);
    assert_eq!(v["pass"], true);
    assert_eq!(v["timings_ms"], serde_json::json!({}));
    let first = &v["checks"][0];
    for k in ["name", "expected", "actual", "pass"] {
        assert!(first.get(k).is_some(), "check lacks {k}");
    }
}

#[test]
fn timings_only_on_request() {
    let out = replay(&["--scenario", "chain", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["timings_ms"]["image_nu_bullet"].is_number());
}

#[test]
fn text_format_and_out_file() {
    let dir = std::env::temp_dir().join(format!("replay-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chain.txt");
    let out = replay(&["--scenario", "chain", "--format", "text", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("scenario chain prime 10000019 seed 0 strategy interpolation\n"));
    assert!(text.contains("PASS degree_trace: expected 6,5,4,3, got 6,5,4,3\n"));
    assert!(text.ends_with("result: pass\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn failing_run_exits_one_and_names_the_check() {
    // 4 is not prime: the scenario reports its error as a failing check.
    let out = replay(&["--scenario", "lemma", "--prime", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("failed check: completed"), "{err}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn rejects_unknown_scenario() {
    let out = replay(&["--scenario", "code3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn all_prefixes_check_names() {
    let out = replay(&["--scenario", "all", "--jobs", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for s in ["code1/", "code2/", "lemma/", "chain/"] {
        assert!(names.iter().any(|n| n.starts_with(s)), "{s}");
    }
    assert!(names[0].starts_with("code1/"));
    assert!(names.last().unwrap().starts_with("chain/"));
}
