use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn netgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netgame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = netgame(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    doc["report"].clone()
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect()
}

#[test]
fn centrality_of_abc() {
    let r = report(&["centrality", "--family", "abc:0.2,0.95", "--gamma", "0.95"]);
    let c = floats(&r["c"]);
    for (got, want) in c.iter().zip([115.0 / 39.0, 400.0 / 39.0, 400.0 / 39.0]) {
        assert!((got - want).abs() < 1e-10, "{got} vs {want}");
    }
}

#[test]
fn precisions_match_gamma() {
    let a = report(&["centrality", "--family", "abc:0.2,0.95", "--gamma", "0.8"]);
    let b = report(&[
        "centrality",
        "--family",
        "abc:0.2,0.95",
        "--tau-x",
        "1",
        "--tau-y",
        "0.25",
    ]);
    assert_eq!(a, b);
}

#[test]
fn region_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g085.csv");
    let out = netgame(&[
        "region",
        "--kind",
        "G",
        "--gamma",
        "0.85",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,gamma,l,m"));
    assert_eq!(lines.nth(1), Some("alpha,beta,member"));
    let members = lines.filter(|l| l.ends_with(",1")).count();
    assert!(members > 0);
}

#[test]
fn dense_core_periphery_loses_welfare() {
    let r = report(&["welfare", "--family", "cp:2,20,0.2,0.95", "--gamma", "0.95"]);
    assert!(r["delta_w"].as_f64().unwrap() < 0.0);
    assert_eq!(r["delta_u"].as_array().unwrap().len(), 22);
}

#[test]
fn welfare_with_intensities() {
    let r = report(&[
        "welfare",
        "--family",
        "abc:0.2,0.95",
        "--gamma",
        "0.9",
        "--r",
        "0.5",
    ]);
    assert!(r["statistic"].is_number());
    let out = netgame(&[
        "welfare",
        "--family",
        "abc:0.2,0.95",
        "--gamma",
        "0.9",
        "--r",
        "0.5,0.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn network_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("net.json");
    fs::write(
        &json,
        r#"{"n": 3, "edges": [[0, 1, 0.2], [1, 2, 0.95], [2, 1, 0.95]]}"#,
    )
    .unwrap();
    let csv = dir.path().join("net.csv");
    fs::write(&csv, "i,j,w\n0,1,0.2\n1,2,0.95\n2,1,0.95\n").unwrap();
    let from_family = report(&["payoffs", "--family", "abc:0.2,0.95", "--gamma", "0.9"]);
    for p in [&json, &csv] {
        let from_file = report(&["payoffs", "--net", p.to_str().unwrap(), "--gamma", "0.9"]);
        assert_eq!(from_file, from_family);
    }
}

#[test]
fn every_verb_reruns_byte_identically() {
    let runs: &[&[&str]] = &[
        &["validate", "--family", "regular:5,0.5"],
        &["centrality", "--family", "cp:2,3,0.3,0.9", "--gamma", "0.7"],
        &[
            "equilibrium",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.9",
            "--variant",
            "i-prime",
        ],
        &[
            "payoffs",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.9",
            "--variant",
            "i-dagger",
            "--holder",
            "1",
        ],
        &[
            "welfare",
            "--family",
            "cp:2,20,0.2,0.95",
            "--gamma",
            "0.95",
            "--format",
            "csv",
        ],
        &["marginal", "--family", "abc:0.2,0.95", "--gamma", "0.9"],
        &[
            "share",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.95",
            "--holder",
            "0",
        ],
        &[
            "region", "--kind", "J", "--gamma", "0.9", "--l", "2", "--m", "5", "--tsv",
        ],
        &["reversal", "--n", "22", "--gamma", "0.95"],
        &[
            "simulate",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.9",
            "--draws",
            "70000",
            "--seed",
            "7",
            "--audit",
        ],
    ];
    for args in runs {
        let a = netgame(args);
        let b = netgame(args);
        assert!(
            a.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn numbers_carry_twelve_significant_digits() {
    let out = netgame(&["marginal", "--family", "abc:0.2,0.95", "--gamma", "0.9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for token in text.split(|c: char| !(c.is_ascii_digit() || c == '.' || c == 'e' || c == '-')) {
        let mantissa = token.split('e').next().unwrap();
        let digits = mantissa
            .trim_start_matches(['-', '0', '.'])
            .replace('.', "");
        assert!(digits.len() <= 12, "{token}");
    }
}

#[test]
fn simulation_agrees_with_closed_form() {
    let r = report(&[
        "simulate",
        "--family",
        "abc:0.3,0.8",
        "--gamma",
        "0.8",
        "--draws",
        "200000",
        "--seed",
        "11",
    ]);
    for z in floats(&r["z"]) {
        assert!(z.abs() <= 3.0, "z = {z}");
    }
}

#[test]
fn invalid_network_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"n": 2, "edges": [[0, 1, 1.5]]}"#).unwrap();
    let p = path.to_str().unwrap();
    let out = netgame(&["validate", "--net", p]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["report"]["valid"], false);
    assert_eq!(
        netgame(&["centrality", "--net", p, "--gamma", "0.5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["frobnicate"],
        &["centrality", "--gamma", "0.5"],
        &[
            "centrality",
            "--family",
            "abc:0.2,0.95",
            "--net",
            "x.json",
            "--gamma",
            "0.5",
        ],
        &["centrality", "--family", "abc:0.2,0.95"],
        &[
            "centrality",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.5",
            "--tau-x",
            "1",
            "--tau-y",
            "1",
        ],
        &["centrality", "--family", "abc:0.2,0.95", "--tau-x", "1"],
        &["centrality", "--family", "abc:0.2,0.95,", "--gamma", "0.5"],
        &["centrality", "--family", "regular:5,0.5 ", "--gamma", "0.5"],
        &["centrality", "--family", "abc:0.2,0.95", "--gamma", "1.5"],
        &[
            "centrality",
            "--net",
            "/nonexistent/net.json",
            "--gamma",
            "0.5",
        ],
        &[
            "centrality",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.5",
            "--bogus",
        ],
        &[
            "payoffs",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.5",
            "--variant",
            "i-dagger",
        ],
        &[
            "equilibrium",
            "--family",
            "regular:4,0.5",
            "--gamma",
            "0.5",
            "--variant",
            "i-prime",
        ],
        &[
            "share",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.5",
            "--holder",
            "3",
        ],
        &["region", "--kind", "H", "--gamma", "0.9"],
        &["region", "--kind", "Q", "--gamma", "0.9"],
        &["reversal", "--n", "2", "--gamma", "0.95"],
        &[
            "simulate",
            "--family",
            "abc:0.2,0.95",
            "--gamma",
            "0.5",
            "--draws",
            "0",
        ],
    ];
    for args in cases {
        let out = netgame(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
