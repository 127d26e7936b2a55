use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_balmaps"))
        .args(args)
        .env("BALMAPS_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn balmaps");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn generate(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let out = run(&full, "");
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn validate_reports_counts() {
    let out = run(&["validate", "-"], &generate(&["octahedron"]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"], 6);
    assert_eq!(v["faces"], 8);
    assert_eq!(v["blue_faces"], 4);
}

#[test]
fn malformed_input_exits_2() {
    let broken = r#"{"fmt":1,"darts":4,"sigma":[[1,2,3,4]],"alpha":[[1,2],[2,3]]}"#;
    let out = run(&["validate", "-"], broken);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an involution"));

    let out = run(&["validate", "-"], "not json");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn balance_verdict_sets_exit_code() {
    let out = run(&["balance", "--oracle", "both", "-"], &generate(&["turkshead", "--n", "3"]));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["balanced"], true);

    let loop_map = r#"{"fmt":1,"darts":4,"sigma":[[1,2,3,4]],"alpha":[[1,2],[3,4]]}"#;
    let out = run(&["balance", "-"], loop_map);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["balanced"], false);
}

#[test]
fn tuple_to_map_and_back() {
    let tuple = r#"{"d":3,"taus":[[1,2],[1,2],[2,3],[2,3]]}"#;
    let out = run(&["from-tuple", "-"], tuple);
    assert_eq!(out.status.code(), Some(0));
    let map = String::from_utf8(out.stdout).unwrap();
    let out = run(&["realize", "-"], &map);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["tuple"]["d"], 3);
    assert_eq!(v["tuple"]["taus"].as_array().unwrap().len(), 4);
}

#[test]
fn hurwitz_count_matches_formula() {
    let out = run(&["hurwitz", "count", "4"], "");
    assert_eq!(json(&out)["count"], "120");
}

#[test]
fn census_matches_fixture() {
    let out = run(&["census", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    let fixture = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/census-d4.json")).unwrap();
    let expected: Value = serde_json::from_str(&fixture).unwrap();
    assert_eq!(json(&out), expected);
}

#[test]
fn dps_verify_degree_three() {
    let out = run(&["dps", "verify", "3", "--schedules", "10"], "");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["trees"], 24);
}

#[test]
fn decompose_quadratic_is_a_leaf() {
    let out = run(&["decompose", "-"], &generate(&["quadratic"]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cuts"], 0);
    assert_eq!(v["leaves"][0]["kind"], "quadratic");
}

#[test]
fn export_dot() {
    let out = run(&["export-dot", "-"], &generate(&["octahedron"]));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph map {"), "{text}");
}
