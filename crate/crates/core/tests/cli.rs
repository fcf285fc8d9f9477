use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_garside-burau"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(bytes: &[u8]) -> Vec<Value> {
    String::from_utf8_lossy(bytes).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn nf_classical_example_golden() {
    let out = run(&["nf", "s2 s1 s3 s1 s3 s2 s1 s1 s2 s1 s3 s1 s3 s1 s2 s2", "-n", "4", "--classical"], "", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"factors\":[\"s2 s1 s3\",\"s1 s3 s2 s1\",\"s1 s2 s1 s3\",\"s1 s3\",\"s1 s2\",\"s2\"],\"inf\":0,\"kind\":\"classical\",\"len\":6,\"n\":4,\"p\":0,\"sup\":6}\n"
    );
}

#[test]
fn burau_reports_degrees_and_determinant() {
    let out = run(&["burau", "D", "-n", "4"], "", &[]);
    let v = &json_lines(&out.stdout)[0];
    assert_eq!(v["max_deg"], 3);
    assert_eq!(v["min_deg"], 1);
    assert_eq!(v["exponent_sum"], 6);
    assert_eq!(v["det"], serde_json::json!({"lo": 6, "coeffs": [1]}));
}

#[test]
fn batch_input_keeps_order() {
    let words: Vec<String> = (1..=40).map(|k| format!("s1^{k}")).collect();
    let out = run(&["nf", "-n", "3"], &words.join("\n"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out.stdout);
    assert_eq!(lines.len(), 40);
    for (k, v) in lines.iter().enumerate() {
        assert_eq!(v["len"], k + 1);
    }
}

#[test]
fn input_errors_exit_2_with_json_on_stderr() {
    let out = run(&["nf", "s1 x", "-n", "3"], "", &[]);
    assert_eq!(out.status.code(), Some(2));
    let e = &json_lines(&out.stderr)[0];
    assert_eq!(e["error"], "syntax");
}

#[test]
fn strict_inconclusive_exits_1() {
    let args = ["--strict", "check", "a1,2 a3,4 a2,4", "-n", "4", "--criterion", "dual-b4"];
    let out = run(&args, "", &[]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_lines(&out.stdout)[0]["conclusion"], "inconclusive");
}

#[test]
fn seed_from_environment() {
    let a = run(&["random", "-n", "4", "-l", "10"], "", &[("GARSIDE_BURAU_SEED", "17")]);
    let b = run(&["random", "-n", "4", "-l", "10", "--seed", "17"], "", &[]);
    let c = run(&["random", "-n", "4", "-l", "10", "--seed", "18"], "", &[]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn recover_word_via_burau() {
    let w = run(&["random", "-n", "5", "-l", "4", "--seed", "3", "--simply-nested"], "", &[]);
    let word = json_lines(&w.stdout)[0]["word"].as_str().unwrap().to_string();
    let rec = run(&["recover", &word, "-n", "5", "--via-burau"], "", &[]);
    let nf = run(&["nf", &word, "-n", "5"], "", &[]);
    assert_eq!(json_lines(&rec.stdout)[0]["nf"], json_lines(&nf.stdout)[0]);
}

#[test]
fn fixtures_run_all_pass() {
    let out = run(&["--strict", "fixtures", "--run"], "", &[]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out.stdout);
    assert!(lines.iter().all(|v| v["passed"] == true));
    let names: Vec<&str> = lines.iter().map(|v| v["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["kernel-b6", "kernel-b5", "reference-nf-b6", "reference-nf-b5", "classical-example-b4"]);
}

#[test]
fn pretty_output_is_text() {
    let out = run(&["--pretty", "nf", "a3,4 a2,4", "-n", "4"], "", &[]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "δ^0 (a3,4) (a2,4)");
}
