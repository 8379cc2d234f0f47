//! End-to-end runs of the binary: exit codes, report contents, stdin input,
//! and byte-stable JSON.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_commpoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_commuting_pair_exits_zero() {
    let out = run(&["check", "-P", "x^2+2*x", "-Q", "x1*x2+x1+x2", "--nu", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("commutes"));
}

#[test]
fn check_non_commuting_pair_exits_three() {
    let out = run(&["check", "-P", "x^2", "-Q", "x1*x2+1", "--nu", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("-2*x1*x2"));
}

#[test]
fn classify_json_normal_form() {
    let out = run(&[
        "classify", "-P", "x^2+2*x", "-Q", "x1*x2+x1+x2", "--nu", "2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "NormalForm");
    assert_eq!(v["lambda"]["a"], "1");
    assert_eq!(v["lambda"]["b"], "1");
    assert_eq!(v["n"], 2);
    assert_eq!(v["alpha"], serde_json::json!([1, 1]));
    assert_eq!(v["c"], "1");
}

#[test]
fn json_output_is_byte_stable() {
    let args = [
        "classify", "-P", "x^2", "-Q", "x1*x2+1", "--nu", "2", "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn syntax_error_exits_two() {
    let out = run(&["check", "-P", "2x", "-Q", "x1", "--nu", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn variable_out_of_range_exits_two() {
    let out = run(&["check", "-P", "x^2", "-Q", "x1*x3", "--nu", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_verb_exits_sixty_four() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn missing_flag_exits_sixty_four() {
    let out = run(&["check", "-P", "x^2"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn q_from_stdin() {
    let out = run_stdin(
        &["check", "-P", "x^2", "-Q", "-", "--nu", "2"],
        "x1*x2\n",
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn residual_verb_prints_polynomial() {
    let out = run(&["residual", "-P", "x^2", "-Q", "x1*x2+1", "--nu", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "-2*x1*x2");
}

#[test]
fn normalize_verb() {
    let out = run(&["normalize", "-P", "2*x^2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lambda"]["a"], "2");
    assert_eq!(v["lambda"]["b"], "0");
    assert_eq!(v["normalized"], "x1^2");
}

#[test]
fn decompose_verb() {
    let out = run(&["decompose", "-Q", "x1*x2+x1+x2", "--nu", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("H1: x1 + x2"));
    assert!(text.contains("H2: x1*x2"));
}

#[test]
fn search_oracle() {
    let out = run(&[
        "search", "-P", "x^2", "--nu", "2", "--deg", "2", "--grid", "-1,0,1", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["total_candidates"], 729);
    assert_eq!(v["violations"], serde_json::json!([]));
    let qs: Vec<&str> = v["commuting"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["q"].as_str().unwrap())
        .collect();
    assert_eq!(qs.len(), 7);
    assert!(qs.contains(&"x1*x2"));
}

#[test]
fn census_requires_pure_power() {
    let out = run(&[
        "census", "-P", "x^2+1", "--nu", "2", "--deg", "2", "--grid", "-1,0,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_n3_contains_negative_monomial() {
    let out = run(&[
        "census", "-P", "x^3", "--nu", "2", "--deg", "2", "--grid", "-1,0,1", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let qs: Vec<&str> = v["commuting"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["q"].as_str().unwrap())
        .collect();
    assert!(qs.contains(&"-x1*x2"));
}

#[test]
fn float_backend_accepts_eps() {
    let out = run(&[
        "check", "-P", "x^2", "-Q", "x1*x2", "--nu", "2", "--backend", "float", "--eps", "1e-20",
    ]);
    assert_eq!(out.status.code(), Some(0));
}
