mod common;

use std::process::{Command, Output};

use common::fixture_path;
use serde_json::Value;

fn jacsyz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacsyz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = jacsyz(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn path(name: &str) -> String {
    fixture_path(name).display().to_string()
}

#[test]
fn exit_codes_for_rejected_input() {
    let cases = [("nonreduced", 2), ("cone", 3), ("malformed", 4)];
    for (name, code) in cases {
        let out = jacsyz(&["analyze", &path(name)]);
        assert_eq!(out.status.code(), Some(code), "{name}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    let out = jacsyz(&["bourbaki", &path("two_quadric_cones"), "--subset", "1,99"]);
    assert_eq!(out.status.code(), Some(5));
    let out = jacsyz(&["analyze", "/nonexistent/input.jsz"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_reports_a_nearly_free_surface() {
    let v = json_of(&["analyze", &path("planes_and_quadric")]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["classification"], "nearly_free");
    assert_eq!(v["syzygies"]["sorted_degrees"], serde_json::json!([1, 1, 2, 2]));
}

#[test]
fn bourbaki_on_declared_generators() {
    let file = path("two_quadric_cones");
    let v = json_of(&["bourbaki", &file, "--use-declared-syzygies", "--subset", "1,6"]);
    assert_eq!(v["tame"], true);
    assert_eq!(v["minors_height"]["value"], 2);
    let v = json_of(&["bourbaki", &file, "--use-declared-syzygies", "--subset", "rho1,rho2"]);
    assert_eq!(v["tame"], false);

    let v = json_of(&["bourbaki", &path("three_cubics"), "--use-declared-syzygies", "--subset", "1,2"]);
    assert_eq!(v["minors_height"]["value"], 1);
    assert_eq!(v["tame"], false);
}

#[test]
fn verify_passes_on_the_quartic() {
    let out = jacsyz(&["verify", &path("quartic_nonstrict_pog"), "--use-declared-syzygies"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(!String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn oracle_counts_for_the_quartic_threefold() {
    let v = json_of(&["oracle", &path("two_quadrics_p4"), "--max-degree", "4"]);
    let mu: Vec<u64> = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["mu"].as_u64().unwrap())
        .collect();
    assert_eq!(mu, vec![0, 4, 0, 6, 0]);
    assert_eq!(v["k_max"], 4);
}

#[test]
fn tame_scan_finds_the_quadric_pair() {
    let v = json_of(&["tame-scan", &path("two_quadric_cones")]);
    assert_eq!(v["b_of_v"], 4);
    assert_eq!(v["status"], "found");
    let out = jacsyz(&["tame-scan", &path("two_quadric_cones")]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("b(V) = 4"));
}

#[test]
fn json_file_output_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let file = path("triangle");
    let out = jacsyz(&["analyze", &file, "--json", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("classification: free"));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written, json_of(&["analyze", &file]));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let file = path("two_quadric_cones");
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_jacsyz"))
            .args(["analyze", &file, "--check-bounds", "--json", "-"])
            .env("JACSYZ_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("4"));
}
