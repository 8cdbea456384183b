use std::process::{Command, Output};

use serde_json::Value;

fn fgx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fgx"))
        .args(args)
        .env_remove("FGX_MAX_COSETS")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = fgx(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timings);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let mut a = json(&["verify", "--all"]);
    let mut b = json(&["verify", "--all"]);
    assert_eq!(a["status"], "PASS");
    assert_eq!(a["failed"], 0);
    strip_timings(&mut a);
    strip_timings(&mut b);
    assert_eq!(a, b);
}

#[test]
fn build_then_analyze_g243() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g243.json");
    let out = fgx(&["build", "G243", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let r = json(&["analyze", path.to_str().unwrap()]);
    assert_eq!(r["order"], 243);
    assert_eq!(r["center_order"], 9);
    assert_eq!(r["derived_order"], 27);
}

#[test]
fn multiplier_of_g39() {
    let r = json(&["multiplier", "G39"]);
    assert_eq!(r["multiplier_invariants"], serde_json::json!([3, 3]));
    assert_eq!(r["hom_size"], 9);
}

#[test]
fn presentation_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g20.json");
    assert!(fgx(&["build", "G20", "--presentation", "--out", path.to_str().unwrap()]).status.success());
    let r = json(&["coset", path.to_str().unwrap()]);
    assert_eq!(r["order"], 18);
}

#[test]
fn chartable_and_spin_types() {
    let r = json(&["chartable", "C3"]);
    assert_eq!(r["degrees"], serde_json::json!([1, 1, 1]));
    let r = json(&["chartable", "R54", "--spin-center", "z12"]);
    let types = r["spin_types"]["types"].as_array().unwrap();
    assert_eq!(types.len(), 3);
    assert!(types.iter().all(|t| t["sum_of_squares"] == 18));
}

#[test]
fn stairway_over_c5_is_empty() {
    let r = json(&["stairway", "C5", "--order", "5"]);
    assert_eq!(r["results"], serde_json::json!([]));
}

#[test]
fn stairway_writes_tables() {
    let dir = tempfile::tempdir().unwrap();
    let r = json(&["stairway", "G20", "--order", "3", "--out-dir", dir.path().to_str().unwrap()]);
    let n = r["results"].as_array().unwrap().len();
    assert_eq!(n, 1);
    let t: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("extension_0.json")).unwrap()).unwrap();
    assert_eq!(t["order"], 54);
}

#[test]
fn text_format() {
    let out = fgx(&["--format", "text", "analyze", "S3"]);
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("center_order"), "{s}");
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    for args in [
        vec!["build", "NOPE"],
        vec!["analyze", bad.to_str().unwrap()],
        vec!["multiplier", "G243"],
        vec!["verify", "no-such-check"],
    ] {
        let out = fgx(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn coset_cap_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g20.json");
    assert!(fgx(&["build", "G20", "--presentation", "--out", path.to_str().unwrap()]).status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_fgx"))
        .args(["coset", path.to_str().unwrap()])
        .env("FGX_MAX_COSETS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
