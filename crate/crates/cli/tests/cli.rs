//! End-to-end checks of the command-line interface: output shapes,
//! determinism, exit codes, the prime override, and agreement with the
//! golden rank tables.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dendriform"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn repo_root() -> PathBuf {
    // crates/cli -> workspace root
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .unwrap()
}

#[test]
fn types_lists_counts() {
    let out = run(&["types", "--degree", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("96 TT-types, 429 DD-types in degree 7\n"));
    assert!(text.contains("TT   1  [[[a,b,c]_1,d,e]_1,f,g]_1\n"));

    let out = run(&["types", "--degree", "3"]);
    let text = stdout(&out);
    assert!(text.starts_with("2 TT-types, 5 DD-types"));
    assert!(text.contains("DD   5  (a>b)>c"));
}

#[test]
fn types_rejects_even_degree() {
    let out = run(&["types", "--degree", "2"]);
    assert!(!out.status.success());
}

#[test]
fn analyze_degree3_report() {
    let out = run(&["analyze", "--degree", "3", "--op", "prelie"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rank"], 9);
    assert_eq!(v["nullity"], 3);
    assert_eq!(v["prime"], 101);
    assert_eq!(v["checks_passed"], true);

    let out = run(&["analyze", "--degree", "3", "--op", "prejordan-lr"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rank"], 12);
    assert_eq!(v["nullity"], 0);
}

#[test]
fn analyze_is_deterministic() {
    let a = run(&["analyze", "--degree", "3", "--op", "prelie"]);
    let b = run(&["analyze", "--degree", "3", "--op", "prelie"]);
    assert_eq!(
        a.stdout, b.stdout,
        "identical runs must produce identical bytes"
    );
}

#[test]
fn prime_override_via_flag_and_env() {
    let out = run(&[
        "analyze", "--degree", "3", "--op", "prelie", "--prime", "103",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["prime"], 103);
    assert_eq!(v["nullity"], 3, "results do not depend on the prime");

    let out = bin()
        .args(["analyze", "--degree", "3", "--op", "prelie"])
        .env("DENDRIFORM_PRIME", "107")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["prime"], 107);

    let out = run(&["analyze", "--degree", "3", "--op", "prelie", "--prime", "4"]);
    assert!(!out.status.success(), "composite modulus must be rejected");
}

#[test]
fn lattice_table() {
    let out = run(&["lattice"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dias            30"));
    assert!(text.contains("dend            18"));
}

#[test]
fn degree7_single_partition_matches_golden_rows() {
    let dir = std::env::temp_dir();
    for (op, lambda, golden) in [
        ("prelie", "421", "degree7_prelie.tsv"),
        ("prejordan", "31111", "degree7_prejordan.tsv"),
    ] {
        let tsv_path = dir.join(format!("dendriform_test_{op}_{lambda}.tsv"));
        let out = run(&[
            "degree7",
            "--op",
            op,
            "--partition",
            lambda,
            "--no-extract",
            "--tsv",
            tsv_path.to_str().unwrap(),
            "--out",
            dir.join("dendriform_test_report.json").to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{op} {lambda}");
        let produced = std::fs::read_to_string(&tsv_path).unwrap();
        let row = produced.lines().nth(1).unwrap();
        let golden_text = std::fs::read_to_string(repo_root().join("golden").join(golden)).unwrap();
        let golden_row = golden_text
            .lines()
            .find(|l| l.starts_with(&format!("{lambda}\t")))
            .expect("golden row present");
        assert_eq!(
            row, golden_row,
            "{op} {lambda} row must match the golden table"
        );
    }
}

#[test]
fn degree7_31111_extraction_report() {
    let out = run(&["degree7", "--op", "prejordan", "--partition", "31111"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["total_new"], 1);
    let p = &v["partitions"][0];
    assert_eq!(p["lifrank"], 546);
    assert_eq!(p["allrank"], 547);
    assert_eq!(p["leading_column_diff"][0], 375);
    let e = &v["extractions"][0];
    assert_eq!(e["row"], 225);
    assert_eq!(e["leading_column"], 375);
    let text = e["text"].as_str().unwrap();
    assert!(
        text.starts_with("[ 2 D_{1,15} ]_25"),
        "first group of the rendered identity: {text}"
    );
    assert!(
        text.contains("[ - 2 D_{1,5} + 3 D_{1,12} - D_{1,15} ]_96"),
        "last group: {text}"
    );
}
