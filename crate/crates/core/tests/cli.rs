use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use qdirac::ops::named::dirac_r;
use qdirac::ops::to_matrix;
use qdirac::ops::ValueSpace;
use qdirac::qclifford::Deformation;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdirac")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qdirac"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn apply_examples() {
    let o = run(&["--n", "3", "apply", "Lap_R", "x3^2 - (1/[3]) * Q"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "0"));
    let o = run(&["--n", "1", "apply", "dR(1)", "x1^3"]);
    assert_eq!(stdout(&o).trim(), "(q^2 + 1 + q^-2)*x1^2");
    let o = run(&["--n", "2", "apply", "g(2)", "x2"]);
    assert_eq!(stdout(&o).trim(), "q*x2");
    let o = run(&["--n", "2", "--format", "latex", "apply", "id", "q^-1*x1^2*x2*e[1,2]"]);
    assert_eq!(stdout(&o).trim(), "q^{-1}x_1^{2}x_2 e_{12}");
}

#[test]
fn check_verdicts_and_exit_codes() {
    let o = run(&["--n", "2", "check", "harmonic", "zq(4)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("harmonic: yes"));
    // Lap_R x1^2 = q [2] at n = 2
    let o = run(&["--n", "2", "check", "harmonic", "x1^2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("residual q^2 + 1"), "{}", stdout(&o));
    let o = run_stdin(&["--n", "2", "check", "harmonic", "-"], "x1^2\n");
    assert_eq!(o.status.code(), Some(1));

    let kernel = to_matrix(&dirac_r(2), 2, 2, ValueSpace::Clifford(Deformation::Plus)).unwrap().kernel_polys();
    assert!(!kernel.is_empty());
    for p in &kernel {
        let o = run(&["--n", "2", "check", "monogenic", &p.to_text()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}

#[test]
fn decompositions() {
    let o = run(&["--n", "3", "decompose", "harmonic", "x3^2"]);
    let text = stdout(&o);
    assert!(text.contains("verified true") && text.contains("level 1: Q *"), "{text}");
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("level")).count(), 2);

    let kernel = to_matrix(&dirac_r(2), 2, 2, ValueSpace::Clifford(Deformation::Plus)).unwrap().kernel_polys();
    let input = kernel[0].to_text();
    let o = run(&["--n", "2", "--format", "json", "decompose", "fischer", &input]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let nonzero: Vec<&Value> = v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|l| !l["poly"]["terms"].as_array().unwrap().is_empty())
        .collect();
    assert_eq!(nonzero.len(), 1);
    assert_eq!(nonzero[0]["s"], 0);

    let o = run(&["--n", "2", "--format", "json", "decompose", "fischer", "x1^2*x2*e[1] - s*x2^3 + i*x1*x2^2*e[1,2]"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["levels"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--all", "--n-max", "3", "--deg-max", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["--n", "4", "verify", "weyl-L"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "no-such"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no-such"));
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["apply", "Lap_R", "x1*("]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 4"), "{}", stderr(&o));
    let o = run(&["--n", "5", "dims"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--unsafe-limits"));
    let o = run(&["--n", "2", "apply", "dR(3)", "x1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn inner_eval_and_dims() {
    let o = run(&["--n", "2", "inner", "x1*x2", "x1*x2"]);
    assert_eq!(stdout(&o).trim(), "q");
    let o = run(&["eval", "--at", "2", "[3]"]);
    assert_eq!(stdout(&o).trim(), "273/16");
    let o = run(&["--n", "2", "--format", "json", "--deg-max", "3", "dims", "--clifford"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().expect("one row per degree");
    for row in rows.iter().filter(|r| r["k"].as_u64().unwrap() >= 1) {
        assert_eq!(row["dim_h"], 2);
        assert_eq!(row["dim_m"], row["dim_m_expected"]);
    }
}

#[test]
fn seeded_json_is_reproducible() {
    let args = ["--format", "json", "--seed", "17", "verify", "product-rule-1", "--n-max", "2"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["seed"], 17);
}
