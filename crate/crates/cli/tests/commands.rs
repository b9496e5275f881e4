use std::process::{Command, Output};

use serde_json::Value;

fn kzr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kzr"))
        .args(args)
        .env_remove("KZR_PRECISION")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = kzr(&all);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), value)
}

#[test]
fn validate_builtin_and_young() {
    let (code, report) = json(&["validate-rep", "--rep", "s4-22"]);
    assert_eq!(code, 0);
    assert_eq!(report["passed"], true);
    assert!(report["identities"]["checks"].as_u64().unwrap() > 0);
    assert_eq!(json(&["validate-rep", "--rep", "young:2,1", "--n", "3"]).0, 0);
}

#[test]
fn validate_partial_data_notes_skipped_braids() {
    let (code, report) = json(&["validate-rep", "--rep", "s5-gen1"]);
    assert_eq!(code, 0);
    let notes = report["identities"]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n == "partial: braid checks skipped"));
}

#[test]
fn bad_selectors_exit_two() {
    assert_eq!(kzr(&["validate-rep", "--rep", "s6-foo"]).status.code(), Some(2));
    assert_eq!(kzr(&["validate-rep", "--rep", "young:2,1", "--n", "4"]).status.code(), Some(2));
    assert_eq!(kzr(&["validate-rep", "--rep", "young:3,0,1"]).status.code(), Some(2));
}

#[test]
fn rationality_verdicts() {
    let (code, report) = json(&["rationality", "--rep", "s4-22"]);
    assert_eq!(code, 0);
    let spectra = report["spectra"].as_array().unwrap();
    assert_eq!(spectra.len(), 4);
    for s in spectra {
        assert_eq!(s["report"]["roots"], serde_json::json!(["0", "0"]));
    }

    let (code, report) = json(&["rationality", "--rep", "s5-gen1", "--k", "1"]);
    assert_eq!(code, 1);
    assert_eq!(report["spectra"][0]["report"]["residual_roots"], "(17±√433)/18");
    assert_eq!(report["integer_spectrum"], false);

    let (code, report) = json(&["rationality", "--rep", "young:3,1", "--n", "4"]);
    let integer = report["integer_spectrum"].as_bool().unwrap();
    assert_eq!(code, if integer { 0 } else { 1 });
}

#[test]
fn solve_and_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("solve.json");
    let out = kzr(&["solve", "--rho", "-1", "--grid", "default", "--out", bundle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let value: Value = serde_json::from_str(&std::fs::read_to_string(&bundle).unwrap()).unwrap();
    assert_eq!(value["kind"], "exact-rational");
    assert_eq!(value["points"].as_array().unwrap().len(), 25);
    assert_eq!(value["points"][0]["y"], "1/2");

    let (code, report) = json(&["verify", "--rho", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(report["passed"], true);
    assert_eq!(json(&["verify", "--rho", "-2", "--lines", "3"]).0, 0);
}

#[test]
fn solve_rejects_zero_rho() {
    let out = kzr(&["solve", "--rho", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ρ = 0"));
}

#[test]
fn pole_grids_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    std::fs::write(&grid, r#"[{"y": "1/2", "z": "1"}, {"y": "-1", "z": "1"}, {"y": "1", "z": "-2"}]"#).unwrap();
    let path = grid.to_str().unwrap();
    let (code, report) = json(&["verify", "--rho", "-1", "--grid", path]);
    assert_eq!(code, 2);
    assert!(report["reports"].as_array().unwrap().iter().any(|r| r["skipped"] == 2));
    assert_eq!(json(&["solve", "--rho", "-1", "--grid", path]).0, 2);
}

#[test]
fn exact_precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kzr"))
        .args(["verify", "--rho", "-1", "--lines", "1", "--json"])
        .env("KZR_PRECISION", "exact")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["precision"], "exact");
    let bad = Command::new(env!("CARGO_BIN_EXE_kzr"))
        .args(["verify", "--rho", "-1"])
        .env("KZR_PRECISION", "quad")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn export_round_trips_through_file_selector() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let out = kzr(&["export-rep", "--rep", "young:2,2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let selector = format!("file:{}", path.display());
    assert_eq!(json(&["validate-rep", "--rep", &selector]).0, 0);
    let printed = kzr(&["export-rep", "--rep", &selector]);
    assert_eq!(String::from_utf8(printed.stdout).unwrap(), std::fs::read_to_string(&path).unwrap());
}

#[test]
fn fractional_rho_runs_numeric_checks() {
    let (code, report) = json(&["verify", "--rho", "-1/2"]);
    assert_eq!(code, 0);
    assert_eq!(report["reports"][0]["mode"], "rk-compare");
}
