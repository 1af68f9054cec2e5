use std::process::{Command, Output};

use serde_json::Value;

fn tsglab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsglab"))
        .args(args)
        .env_remove("TSGLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn classify_27_json() {
    let o = tsglab(&["classify", "27", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    let groups: Vec<&str> = v["groups"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    assert_eq!(groups.len(), 15);
    for g in ["Z2", "Z27", "D25", "Z3xZ3", "Z3xZ9"] {
        assert!(groups.contains(&g), "{g}");
    }
}

#[test]
fn classify_is_byte_identical() {
    let a = tsglab(&["classify", "63", "--json"]);
    let b = tsglab(&["classify", "63", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(tsglab(&["classify", "15"]).stdout, tsglab(&["classify", "15"]).stdout);
}

#[test]
fn check_perm_condition_three() {
    let o = tsglab(&["check-perm", "(1 2 3)(4 5 6)", "--n", "7", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("realizable via condition 3"), "{}", stdout(&o));
}

#[test]
fn check_perm_negative_is_exit_1() {
    // a 4-cycle with three fixed points: m = 4 > 2 even needs no fixed points
    let o = tsglab(&["check-perm", "(1 2 3 4)", "--n", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("not realizable"));
    let v = json(&tsglab(&["check-perm", "(1 2 3 4)", "--n", "7", "--json"]));
    assert_eq!(v["realizable"], false);
}

#[test]
fn admits_d2_is_rejected_with_obstruction() {
    let o = tsglab(&["admits", "7", "D2"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("rejected: D2 lemma"), "{out}");
    assert!(out.contains("D2 obstruction for K_7"));
}

#[test]
fn admits_positive() {
    let o = tsglab(&["admits", "15", "Z3xZ3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["admitted"], true);
}

#[test]
fn verify_pq_small() {
    let o = tsglab(&["verify", "pq", "--q-max", "9", "--n-max", "45", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    assert!(v["cases"].as_u64().unwrap() > 0);
}

#[test]
fn verify_d2_and_friends() {
    for args in [
        &["verify", "d2", "--n", "7"][..],
        &["verify", "fixed-vertex", "--p", "3", "--q", "9", "--n-max", "45"],
        &["verify", "3cycle", "--p", "3", "--q", "3", "--n-max", "30"],
    ] {
        let o = tsglab(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("consistent"));
    }
}

#[test]
fn usage_errors_are_exit_2() {
    for args in [
        &["classify", "8"][..],
        &["classify", "abc"],
        &["admits", "7", "Q8"],
        &["check-perm", "(1 2", "--n", "7"],
        &["check-perm", "(1 9)", "--n", "7"],
        &["verify", "fixed-vertex"],
        &["verify", "nonsense"],
        &["frobnicate"],
        &[],
    ] {
        let o = tsglab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_is_exit_0() {
    let o = tsglab(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("classify"));
}

#[test]
fn plan_json_carries_hypotheses() {
    let o = tsglab(&["plan", "23", "D5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["hypotheses"]["pass"], true);
    assert_eq!(v["schema"], 1);
    let o = tsglab(&["plan", "7", "D2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn seed_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| -> Value {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_tsglab"));
        cmd.args(["verify", "orbits", "--n-max", "12", "--trials", "20", "--json"]);
        if let Some(f) = flag {
            cmd.args(["--seed", f]);
        }
        cmd.env_remove("TSGLAB_SEED");
        if let Some(e) = env {
            cmd.env("TSGLAB_SEED", e);
        }
        let o = cmd.output().unwrap();
        assert_eq!(o.status.code(), Some(0));
        serde_json::from_slice(&o.stdout).unwrap()
    };
    assert_eq!(run(None, None)["seed"], 42);
    assert_eq!(run(Some("7"), None)["seed"], 7);
    assert_eq!(run(Some("7"), Some("9"))["seed"], 9);
    // same seed, same sample
    assert_eq!(run(None, Some("3"))["params"], run(Some("3"), None)["params"]);

    let o = Command::new(env!("CARGO_BIN_EXE_tsglab"))
        .args(["verify", "orbits", "--trials", "5"])
        .env("TSGLAB_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn progress_goes_to_stderr() {
    let o = tsglab(&["verify", "orbits", "--n-max", "12", "--trials", "10", "--json"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("running"));
    json(&o);
}
