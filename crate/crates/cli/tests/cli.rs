use std::process::{Command, Output};

use robin_core::ball::{assemble_spectrum, BallProblem, EigenvalueRecord};
use serde_json::Value;

fn robin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_robin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = robin(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn eigen_reports_record_fields() {
    let v = json(&["eigen", "--dim", "2", "--alpha", "1", "--l", "0", "--m", "1"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["problem"]["kind"], "ball");
    let rec = &v["records"][0];
    for key in ["l", "m", "k", "mu", "sign_class", "multiplicity", "residual"] {
        assert!(rec.get(key).is_some(), "missing {key}");
    }
    assert!((rec["k"].as_f64().unwrap() - 1.25578).abs() < 5e-6);
}

#[test]
fn eigen_zero_and_negative() {
    let v = json(&["eigen", "--dim", "2", "--alpha", "0", "--l", "0", "--m", "1"]);
    assert_eq!(v["records"][0]["mu"].as_f64(), Some(0.0));
    assert_eq!(v["records"][0]["sign_class"], "zero");
    let v = json(&["eigen", "--dim", "3", "--alpha", "-0.5", "--l", "0", "--m", "1"]);
    let mu = v["records"][0]["mu"].as_f64().unwrap();
    assert!((mu + 1.28784f64.powi(2)).abs() < 2e-5);
}

#[test]
fn positive_branch_request_on_threshold_is_usage_error() {
    let out = robin(&[
        "eigen",
        "--dim",
        "2",
        "--alpha",
        "-1",
        "--l",
        "1",
        "--m",
        "1",
        "--positive",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flag_misuse_exits_2() {
    for args in [
        vec!["spectrum", "--dim", "2", "--alpha", "1"],
        vec!["spectrum", "--dim", "2", "--interval", "--alpha", "1", "--count", "2"],
        vec![
            "spectrum", "--dim", "2", "--alpha", "1", "--count", "2", "--cutoff", "3",
        ],
        vec!["eigen", "--dim", "1", "--alpha", "1", "--l", "0", "--m", "1"],
        vec!["eigen", "--dim", "2", "--alpha", "1", "--l", "0", "--m", "0"],
        vec![
            "eigenfunction",
            "--dim",
            "2",
            "--alpha",
            "1",
            "--m",
            "1",
            "--samples",
            "1",
        ],
        vec!["verify", "--dim", "2", "--alpha", "1", "--grids", "64,32"],
    ] {
        assert_eq!(robin(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn spectrum_count_expands_multiplicity() {
    let out = robin(&[
        "spectrum", "--dim", "2", "--alpha", "1", "--count", "3", "--format", "csv",
    ]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1][2], rows[2][2]);
    assert_eq!(rows[1][5], "2");
}

#[test]
fn spectrum_with_zero_record() {
    let out = robin(&[
        "spectrum", "--dim", "2", "--alpha", "-2", "--cutoff", "0", "--format", "csv",
    ]);
    let rows = csv_rows(&stdout(&out));
    let classes: Vec<&str> = rows.iter().map(|r| r[4].as_str()).collect();
    assert_eq!(classes, ["negative", "negative", "zero"]);
}

#[test]
fn interval_forms_agree() {
    let a = stdout(&robin(&[
        "spectrum",
        "--interval",
        "--alpha",
        "-3",
        "--count",
        "2",
        "--format",
        "csv",
    ]));
    let b = stdout(&robin(&[
        "interval", "--alpha", "-3", "--count", "2", "--format", "csv",
    ]));
    assert_eq!(a, b);
    let rows = csv_rows(&a);
    assert_eq!(rows[0][1], "-10.52118");
    assert_eq!(rows[1][1], "-6.63412");
}

#[test]
fn json_round_trip_is_exact() {
    let v = json(&["spectrum", "--dim", "3", "--alpha", "-1.7", "--cutoff", "60"]);
    let parsed: Vec<EigenvalueRecord> = serde_json::from_value(v["records"].clone()).unwrap();
    let direct = assemble_spectrum(&BallProblem::new(3, -1.7).unwrap(), 60.0)
        .unwrap()
        .records;
    assert_eq!(parsed, direct);
}

#[test]
fn tables_are_reproducible() {
    let first = stdout(&robin(&["table1", "--format", "csv"]));
    let second = stdout(&robin(&["table1", "--format", "csv"]));
    assert_eq!(first, second);
    assert!(first
        .lines()
        .any(|l| l.starts_with("k,1,1/2") && l.contains(",3.72638,")));
    assert!(first
        .lines()
        .any(|l| l.starts_with("mu2/mu1 3D") && l.ends_with(",2.04575")));
    let t2 = stdout(&robin(&["table2", "--format", "csv"]));
    assert!(t2
        .lines()
        .any(|l| l.starts_with("mu2/mu1 2D") && l.contains(",-15.12204,")));
    let v = json(&["table2"]);
    assert_eq!(v["table"], "table2");
    assert_eq!(v["ratios"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_exit_codes() {
    let out = robin(&[
        "verify",
        "--dim",
        "2",
        "--alpha",
        "1",
        "--cutoff",
        "40",
        "--grids",
        "512,1024,2048",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = robin(&["verify", "--interval", "--alpha", "0", "--grids", "1024"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = robin(&[
        "verify", "--dim", "3", "--alpha", "-0.9", "--cutoff", "5", "--grids", "2048", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn eigenfunction_profiles() {
    let out = robin(&[
        "eigenfunction",
        "--dim",
        "3",
        "--alpha",
        "1",
        "--l",
        "0",
        "--m",
        "1",
        "--samples",
        "11",
    ]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 11);
    let k = std::f64::consts::FRAC_PI_2;
    let v0: f64 = rows[0][1].parse().unwrap();
    for row in &rows[1..] {
        let r: f64 = row[0].parse().unwrap();
        let v: f64 = row[1].parse().unwrap();
        // ∝ sin(kr)/r with v(0) the limit k·c
        assert!((v - v0 * (k * r).sin() / (k * r)).abs() < 1e-9, "r={r}");
    }

    let out = robin(&["eigenfunction", "--dim", "2", "--alpha", "-1", "--l", "1", "--m", "1"]);
    for row in csv_rows(&stdout(&out)) {
        assert_eq!(row[0], row[1]);
    }

    let out = robin(&[
        "eigenfunction",
        "--dim",
        "2",
        "--alpha",
        "1",
        "--l",
        "0",
        "--m",
        "3",
        "--samples",
        "201",
    ]);
    let values: Vec<f64> = csv_rows(&stdout(&out)).iter().map(|r| r[1].parse().unwrap()).collect();
    let changes = values.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
    assert_eq!(changes, 2);
}
