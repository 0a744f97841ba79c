//! End-to-end checks of the command-line interface: output shapes, exit
//! codes and flag handling.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_varbounds"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

#[test]
fn bounds_subcommand_emits_ordered_json() {
    let out = run(&["bounds", "--example", "1", "--theta", "0", "--permutations"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = parsed.as_array().unwrap();
    let families: Vec<&str> = rows.iter().map(|r| r["family"].as_str().unwrap()).collect();
    assert_eq!(
        families,
        ["variance_sum", "song", "zhang", "lb1", "lb2", "lb1_pi"]
    );
    assert!((rows[0]["value"].as_f64().unwrap() - 4.25).abs() < 1e-12);
    let sum = rows[0]["value"].as_f64().unwrap();
    for row in &rows[1..] {
        assert!(row["value"].as_f64().unwrap() <= sum + 1e-9);
    }
}

#[test]
fn bounds_without_permutations_has_five_rows() {
    let out = run(&["bounds", "--example", "3", "--theta", "1.2", "--phi", "0.4"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 5);
}

#[test]
fn sweep_writes_csv_and_manifest() {
    let out_path = tmp("sweep.csv");
    let out = run(&[
        "sweep",
        "--example",
        "2",
        "--steps",
        "11",
        "--alpha",
        "5",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(&out_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "theta,sum,song,zhang,lb1_opt,lb1_alpha,lb2_opt,lb2_t,lb1_fixed"
    );
    assert_eq!(lines.count(), 11);
    let manifest = fs::read_to_string(format!("{}.manifest.json", out_path.display())).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    assert_eq!(parsed["example"], 2);
    assert_eq!(parsed["grid_points_per_octave"], 20);
}

#[test]
fn audit_reports_and_exits_zero_when_clean() {
    let out_path = tmp("audit.json");
    let out = run(&[
        "audit",
        "--dims",
        "2",
        "--nobs",
        "2,3",
        "--trials",
        "12",
        "--seed",
        "3",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(parsed["violations"], 0);
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["sweeep"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["sweep", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn validation_errors_exit_two() {
    let out = run(&["bounds", "--example", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "sweep",
        "--example",
        "1",
        "--steps",
        "1",
        "--output",
        tmp("one.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn io_errors_exit_three() {
    let out = run(&[
        "sweep",
        "--example",
        "1",
        "--steps",
        "3",
        "--output",
        "/nonexistent-dir/sweep.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}
