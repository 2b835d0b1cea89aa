use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn input(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("inputs").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duoidal")).args(args).output().expect("binary runs")
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("duoidal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn validate_accepts_the_examples() {
    for f in ["z2-groupoid.json", "walking-arrow.json", "pair-groupoid.json", "qz2-constants.json", "sweedler.json", "idempotent.json"] {
        let o = run(&["validate", &input(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn diagnose_hopf_model_exits_zero() {
    let o = run(&["diagnose", &input("z2-groupoid.json"), "--samples", "2", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["verdicts"]["a"]["verdict"], "holds");
    assert_eq!(v["samples"], 2);
    assert!(v["timing"]["run_ms"].as_f64().is_some());
    assert_eq!(v["antipode_involutive"], true);
}

#[test]
fn diagnose_non_hopf_model_exits_one_with_witnesses() {
    let o = run(&["diagnose", &input("walking-arrow.json"), "--samples", "1", "--json", "-"]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["verdicts"]["a"]["verdict"], "fails");
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
    let rec: duoidal::diagnose::WitnessRecord = serde_json::from_value(v["witnesses"][0].clone()).unwrap();
    assert!(rec.replays());
}

#[test]
fn override_switches_backend() {
    let o = run(&["diagnose", &input("z2-groupoid.json"), "--backend-override", "gvec-commutative", "--samples", "1", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["backend"]["preset"], "gvec-commutative");
}

#[test]
fn antipode_reports_found_and_missing() {
    let o = run(&["antipode", &input("qz2-constants.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["result"], "found");
    let o = run(&["antipode", &input("idempotent.json")]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["result"], "missing");
    assert!(v["witness"]["witness"]["kind"].is_string());
}

#[test]
fn schema_errors_point_at_the_field() {
    let cases = [
        (r#"{"backend": "span", "parameters": {"size": "two"}, "model": {"kind": "walking-arrow"}}"#, "/parameters/size"),
        (r#"{"backend": "prof", "parameters": {"size": 1}, "model": {"kind": "walking-arrow"}}"#, "/backend"),
        (r#"{"backend": "span", "parameters": {"size": 1}, "model": {"kind": "nope"}}"#, "/model"),
    ];
    for (k, (text, ptr)) in cases.iter().enumerate() {
        let o = run(&["validate", &scratch(&format!("bad{k}.json"), text)]);
        assert_eq!(o.status.code(), Some(2));
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(&format!("input error at {ptr}")), "{err}");
    }
}

#[test]
fn weak_backend_needs_the_feature() {
    let f = scratch("weak.json", r#"{"backend": "gvec-weak", "parameters": {"n": 1}, "model": {"kind": "trivial-i"}}"#);
    assert_eq!(run(&["validate", &f]).status.code(), Some(2));
    assert_eq!(run(&["--feature", "weak-models", "validate", &f]).status.code(), Some(0));
}

#[test]
fn missing_file_is_an_input_error() {
    assert_eq!(run(&["validate", "/nonexistent/model.json"]).status.code(), Some(2));
}

#[test]
fn selftest_passes_and_reports_json() {
    let o = run(&["selftest", "--suite", "transform", "--backend", "span", "--count", "3", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert!(v.to_string().contains("transform"));
}
