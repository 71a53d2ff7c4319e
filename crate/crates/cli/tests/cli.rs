use std::path::Path;
use std::process::{Command, Output};

fn spinbundle(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinbundle"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn verify_defaults_pass() {
    let dir = tempfile::tempdir().unwrap();
    let out = spinbundle(&["verify", "--seed", "1"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    for check in report["checks"].as_array().unwrap() {
        assert!(check["tag"].as_str().unwrap().starts_with("Eq"));
    }
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(dir.path(), "c.json", r#"{"verify": {"tolerance_override": 1e-20, "random_samples": 50}}"#);
    let out = spinbundle(&["verify", "--config", &config, "--out", "r.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], false);
    assert!(report["checks"].as_array().unwrap().iter().any(|c| c["passed"] == false));
}

#[test]
fn config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", r#"{"mass": "#);
    assert_eq!(spinbundle(&["verify", "--config", &broken], dir.path()).status.code(), Some(2));
    assert_eq!(spinbundle(&["verify", "--config", "missing.json"], dir.path()).status.code(), Some(2));
    let empty = write(dir.path(), "empty.json", r#"{"transformations": []}"#);
    assert_eq!(spinbundle(&["covariance", "--config", &empty], dir.path()).status.code(), Some(2));
    assert_eq!(spinbundle(&["verify", "--grid-n", "1"], dir.path()).status.code(), Some(2));
    assert_eq!(spinbundle(&["frobnicate"], dir.path()).status.code(), Some(2));
}

#[test]
fn small_cube_reports_coverage_with_a_hint() {
    let dir = tempfile::tempdir().unwrap();
    let out = spinbundle(&["covariance", "--pmax", "0.5"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--pmax"));
}

#[test]
fn covariance_writes_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = spinbundle(&["covariance", "--out", "t.csv"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    assert!(csv.starts_with("state,"));
    assert_eq!(csv.lines().count(), 4);
    let out = spinbundle(&["covariance"], dir.path());
    let table: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = table["rows"].as_array().unwrap();
    assert_eq!(rows[0]["pauli_lubansky"]["tag"], "Eq. 70");
    assert_eq!(rows[1]["peres"]["verdict"], "non_covariant");
}

#[test]
fn expectation_of_a_sharp_packet_at_rest() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(
        dir.path(),
        "e.json",
        r#"{"states": [{"m": 1.0, "center": [0, 0, 0], "sigma": 0.05,
                        "spinor_rule": {"constant": [[1, 0], [0, 0]]}, "picture": "alternative"}],
            "transformations": [{"type": "boost", "axis": [0, 0, 1], "angle_or_rapidity": 0.8}]}"#,
    );
    let out = spinbundle(&["expectation", "--config", &config], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let state = &report["states"][0];
    let w: Vec<f64> = serde_json::from_value(state["pauli_lubansky"]["value"].clone()).unwrap();
    assert!((w[3] - 0.5).abs() < 1e-2 && w[0].abs() < 1e-2);
    let s: Vec<f64> = serde_json::from_value(state["newton_wigner"]["value"].clone()).unwrap();
    assert!((s[2] - 0.5).abs() < 1e-2);
    assert!(state["theta"]["residual"].as_f64().unwrap() <= 1e-9);
    assert!(state["transformed"][0]["residual"].as_f64().unwrap() <= 1e-5);
}
