use std::process::{Command, Output};

use serde_json::Value;

fn fcy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcy")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = fcy(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn coxeter_j11() {
    let v = json(&["coxeter", "--m", "1", "--n", "1", "--format", "json"]);
    assert_eq!(v["exponent"], 3);
    assert_eq!(v["sign"], -1);
    assert_eq!(v["holds"], true);
    assert_eq!(v["schema"], "fcy/1");
}

#[test]
fn verify_j22_passes() {
    let out = fcy(&["verify", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["cardinality", "antichains", "hom0", "serre-step", "relations", "words", "tilting", "duality"] {
        assert!(text.contains(name), "{name} missing from the summary");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn corrupted_sign_reaches_exit_status() {
    let out = fcy(&["verify", "--m", "2", "--n", "2", "--corrupt-sign"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL relations"));
    assert!(text.contains("FAIL coxeter"));
    let out = fcy(&["verify", "--m", "2", "--n", "2", "--checks", "hom,orbit", "--corrupt-sign"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "--m", "2", "--n", "3", "--format", "json", "--jobs", "4"],
        vec!["presentation", "--m", "2", "--n", "3", "--variant", "w", "--format", "json"],
        vec!["hom", "--m", "2", "--n", "2", "--format", "csv"],
    ] {
        let a = fcy(&args);
        let b = fcy(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = fcy(&["verify", "--m", "2", "--n", "3", "--format", "json", "--jobs", "1"]);
    let four = fcy(&["verify", "--m", "2", "--n", "3", "--format", "json", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn orbit_worked_instance() {
    let v = json(&["orbit", "--m", "5", "--n", "7", "--alpha", "0,2,3,7,7", "--format", "json"]);
    assert_eq!(v["steps"].as_array().unwrap().len(), 13);
    assert_eq!(v["sum_s"], 35);
    let v = json(&["orbit", "--m", "5", "--n", "7", "--config", "-4,0,2,3,7", "--format", "json"]);
    assert_eq!(v["steps"][0]["configuration"], "{-5,-1,1,2,6}");
}

#[test]
fn exports() {
    let v = json(&["lattice", "--m", "1", "--n", "2", "--format", "json"]);
    assert_eq!(v["elements"], serde_json::json!([[0], [1], [2]]));
    let v = json(&["presentation", "--m", "2", "--n", "2", "--variant", "v", "--format", "json"]);
    assert_eq!(v["orientation"], "op");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    let v = json(&["resolve", "--m", "2", "--n", "2", "--alpha", "1,2", "--format", "json"]);
    assert_eq!(v["degrees"][0][0], "(1,2)");
    let dot = fcy(&["auslander", "--s", "3", "--d", "1", "--dual", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph quiver {"));

    let path = std::env::temp_dir().join(format!("fcy-cli-test-{}.json", std::process::id()));
    let out = fcy(&["lattice", "--m", "2", "--n", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn auslander_duality_check() {
    let v = json(&["auslander", "--s", "4", "--d", "1", "--check", "--format", "json"]);
    assert_eq!(v["isomorphic"], true);
}

#[test]
fn errors_go_to_stderr() {
    let out = fcy(&["lattice", "--m", "9", "--n", "9", "--cap", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert!(out.stdout.is_empty());

    let out = fcy(&["presentation", "--variant", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fcy(&["resolve", "--m", "2", "--n", "2", "--alpha", "3,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fcy(&["lattice", "--bogus"]);
    assert_ne!(out.status.code(), Some(0));
    let out = fcy(&["lattice", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}
