use std::process::{Command, Output};

use tbh_core::bratteli::{build_diagram, BratteliDiagram};
use tbh_core::partitions::HeckeParams;

fn tbh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbh")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

const UNIT: [&str; 8] = ["--a", "1", "--b", "1", "--p", "1", "--q", "1"];

fn with_unit(cmd: &str, extra: &[&str]) -> Vec<String> {
    std::iter::once(cmd).chain(UNIT).chain(extra.iter().copied()).map(String::from).collect()
}

fn run(cmd: &str, extra: &[&str]) -> Output {
    let args = with_unit(cmd, extra);
    tbh(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn bratteli_dot_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diagram.dot");
    let out = tbh(&[
        "bratteli", "--a", "4", "--b", "2", "--p", "4", "--q", "2", "--k", "1", "--format", "dot", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    let mut labels: Vec<i64> = dot
        .lines()
        .filter(|l| l.trim_start().starts_with("r0_") && l.contains("->"))
        .map(|l| l.split("label=\"").nth(1).unwrap().trim_end_matches("\"];").parse().unwrap())
        .collect();
    labels.sort();
    assert_eq!(labels, vec![-16, -8, -2, 2, 8, 16]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("level sizes: 1 6 18"));
}

#[test]
fn bratteli_json_round_trip_and_rank_count() {
    let out = run("bratteli", &["--k", "0"]);
    assert_eq!(code(&out), 0);
    let d = BratteliDiagram::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(d.num_ranks(), 2);
    let out = run("bratteli", &["--k", "2"]);
    let parsed = BratteliDiagram::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(parsed, build_diagram(&HeckeParams::new(1, 1, 1, 1, 2).unwrap()));
}

#[test]
fn output_is_deterministic() {
    let a = run("bratteli", &["--k", "3", "--format", "dot"]);
    let b = run("bratteli", &["--k", "3", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run("seminormal", &["--k", "2", "--all-lambda", "--format", "json"]);
    let b = run("seminormal", &["--k", "2", "--all-lambda", "--format", "json", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seminormal_passes_and_rejects_bad_shape() {
    let out = run("seminormal", &["--k", "2", "--lambda", "2,2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8(out.stdout).unwrap().contains("PASS"));
    assert_eq!(code(&run("seminormal", &["--k", "1", "--lambda", "5"])), 3);
    assert_eq!(code(&run("seminormal", &["--k", "1", "--lambda", "2,x"])), 2);
}

#[test]
fn seminormal_all_lambda_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run("seminormal", &["--k", "3", "--all-lambda", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let modules = doc["modules"].as_array().unwrap();
    assert_eq!(modules.len(), tbh_core::partitions::enum_pk(&HeckeParams::new(1, 1, 1, 1, 3).unwrap(), 3).len());
    assert!(modules.iter().all(|m| m["pass"] == true));
    assert!(modules[0]["module"]["matrices"]["w_0"].is_array());
}

#[test]
fn oracle_exit_codes() {
    let out = run("oracle", &["--n", "2", "--k", "2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("commutant") && !text.contains("FAIL"));
    assert_eq!(code(&run("oracle", &["--n", "1", "--k", "1"])), 4);
    let out = run("oracle", &["--n", "2", "--k", "0", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let spectra = doc["spectra"]["entries"].as_array().unwrap();
    assert_eq!(spectra.len(), 1);
    assert_eq!(spectra[0]["generator"], "z_0");
}

#[test]
fn validation_errors() {
    assert_eq!(code(&tbh(&["dims", "--a", "0", "--b", "1", "--p", "1", "--q", "1"])), 2);
    assert_eq!(code(&tbh(&["bratteli", "--a", "1"])), 2);
    assert_eq!(code(&tbh(&["frobnicate"])), 2);
    assert_eq!(code(&run("seminormal", &["--lambda", "1", "--tolerance", "-1"])), 2);
}

#[test]
fn normalization_notice() {
    let out = tbh(&["dims", "--a", "1", "--b", "2", "--p", "1", "--q", "2"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stderr).unwrap().contains("normalized"));
}

#[test]
fn dims_weighted_sum_matches_carrier() {
    let out = run("dims", &["--k", "2", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // dim M · dim N · n^k = 2 · 2 · 4
    assert_eq!(doc["weighted_sum"], 16);
}
