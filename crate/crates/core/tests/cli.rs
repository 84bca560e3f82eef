use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secant-planes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn rho_reports_zero() {
    let v = json(&["rho", "--g", "4", "--r", "1", "--d", "3"]);
    assert_eq!(v["outputs"]["rho"], 0);
    assert_eq!(v["command"], "rho");
    assert_eq!(v["validity_flags"], Value::Array(vec![]));
}

#[test]
fn castelnuovo_twisted_cubic_chord_count() {
    let v = json(&["castelnuovo", "--d", "5", "--g", "0", "--r", "3"]);
    assert_eq!(v["outputs"]["count"], 1);
    assert_eq!(v["outputs"]["formula"], "GENERAL_SUM");
}

#[test]
fn chain_count_small_pencil() {
    let v = json(&["chain-count", "--g", "4", "--r", "1", "--d", "3"]);
    assert_eq!(v["outputs"]["count"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["rho", "--g", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["rho-ram", "--g", "3", "--r", "1", "--d", "3", "--alpha", "x,1"])
            .status
            .code(),
        Some(2)
    );
    let out = run(&["chain-count", "--g", "1", "--r", "1", "--d", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NOT_RHO_ZERO"));
    assert_eq!(
        run(&["rho", "--g", "-1", "--r", "1", "--d", "3"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn recorded_inputs_reproduce_the_output() {
    let cases: &[&[&str]] = &[
        &["rho", "--g", "7", "--r", "2", "--d", "6"],
        &[
            "rho-ram", "--g", "3", "--r", "1", "--d", "3", "--alpha", "0,1",
        ],
        &[
            "secant-dim",
            "--g",
            "8",
            "--d",
            "10",
            "--r",
            "3",
            "--e",
            "4",
            "--f",
            "2",
        ],
        &[
            "verdict", "--g", "1", "--d", "4", "--r", "3", "--e", "3", "--f", "1",
        ],
        &["castelnuovo", "--d", "9", "--g", "4", "--r", "3"],
        &["cayley", "--d", "9", "--g", "4"],
        &["chain-count", "--g", "6", "--r", "2", "--d", "6"],
        &["chain-enum", "--g", "4", "--r", "1", "--d", "3"],
        &[
            "construct",
            "--g",
            "8",
            "--d",
            "10",
            "--r",
            "3",
            "--e",
            "4",
            "--f",
            "2",
        ],
        &[
            "power-bound",
            "--g",
            "3",
            "--r",
            "3",
            "--d",
            "6",
            "--n",
            "3",
        ],
        &[
            "square-bound",
            "--g",
            "3",
            "--r",
            "3",
            "--d",
            "6",
            "--alpha",
            "0,0,1,2",
        ],
    ];
    for args in cases {
        let first = run(args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        let v: Value = serde_json::from_slice(&first.stdout).unwrap();
        let mut replay = vec![args[0].to_string()];
        for (k, val) in v["inputs"].as_object().unwrap() {
            replay.push(format!("--{k}"));
            replay.push(match val {
                Value::Array(xs) => xs
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                other => other.to_string(),
            });
        }
        let refs: Vec<&str> = replay.iter().map(String::as_str).collect();
        let second = run(&refs);
        assert_eq!(first.stdout, second.stdout, "{args:?} vs {replay:?}");
    }
}

#[test]
fn consistency_grid_has_no_mismatches() {
    let v = json(&["consistency", "--dmax", "40", "--gmax", "25"]);
    assert_eq!(v["outputs"]["mismatches"], 0);
}

#[test]
fn csv_output_has_header_and_row() {
    let out = run(&["--format", "csv", "cayley", "--d", "6", "--g", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let row = reader.records().next().unwrap().unwrap();
    let count = headers.iter().position(|h| h.ends_with("count")).unwrap();
    assert_eq!(&row[count], "3");
}

#[test]
fn chain_enum_respects_limit() {
    let out = run(&[
        "--quiet",
        "chain-enum",
        "--g",
        "6",
        "--r",
        "1",
        "--d",
        "4",
        "--limit",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["validity_flags"]
        .as_array()
        .unwrap()
        .contains(&Value::from("TRUNCATED")));
    assert_eq!(v["outputs"]["paths"].as_array().unwrap().len(), 2);
    assert_eq!(v["outputs"]["total"], 5);
}

#[test]
fn table_sweeps_a_grid_in_order() {
    let out = run(&[
        "table",
        "castelnuovo",
        "--d",
        "5..=6",
        "--g",
        "0..2",
        "--r",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 4);
    let counts: Vec<_> = rows.iter().map(|r| r[col("count")].to_string()).collect();
    // (d,g) = (5,0) (5,1) (6,0) (6,1)
    assert_eq!(counts, ["1", "0", "6", "3"]);
    assert!(rows.iter().all(|r| &r[col("row_status")] == "OK"));
}

#[test]
fn table_headers_are_unique() {
    let out = run(&[
        "table", "verdict", "--g", "0..=3", "--d", "6", "--r", "3", "--e", "4", "--f", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
    let mut sorted = header.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), header.len(), "{header:?}");
}
