use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bncells"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(&[args, &["--format", "json"]].concat());
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn two_sided_cells_rank_two() {
    let v = json(&["cells", "--n", "2", "--side", "two"]);
    assert_eq!(v["side"], "two");
    let cells = v["cells"].as_array().unwrap();
    let total: usize = cells
        .iter()
        .map(|c| c["elements"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 8);
    assert_eq!(cells.len(), 5);
}

#[test]
fn cells_schema() {
    let v = json(&[
        "cells",
        "--n",
        "3",
        "--order",
        "asymptotic",
        "--side",
        "left",
    ]);
    assert_eq!(v["n"], 3);
    assert_eq!(v["order"], "asymptotic");
    assert_eq!(v["cells"].as_array().unwrap().len(), 20);
    assert_eq!(
        v["cells"][0],
        serde_json::json!({"type": "3|-", "elements": ["e"]})
    );
    let right = json(&["cells", "--n", "3", "--side", "right"]);
    assert_eq!(right["cells"].as_array().unwrap().len(), 20);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["cells", "--n", "3", "--order", "revlex", "--format", "json"]);
    let b = run(&["cells", "--n", "3", "--order", "revlex", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cellmod_accepts_windows() {
    let v = json(&[
        "cellmod",
        "--n",
        "3",
        "--cell-of",
        "[-1,3,2]",
        "--basis",
        "[-1,3,2],s1 s2 t,s2 s1 s2 t",
    ]);
    assert_eq!(
        v["elements"],
        serde_json::json!(["s2 t", "s1 s2 t", "s2 s1 s2 t"])
    );
    assert_eq!(v["matrices"][1]["generator"], "s1");
    assert_eq!(v["matrices"][1]["matrix"][0][0], "-V^0*v^-1");
}

#[test]
fn identity_cell_module() {
    let v = json(&["cellmod", "--n", "3", "--cell-of", "e"]);
    let ms = v["matrices"].as_array().unwrap();
    assert_eq!(ms[0]["matrix"], serde_json::json!([["-V^-1*v^0"]]));
    assert_eq!(ms[1]["matrix"], serde_json::json!([["-V^0*v^-1"]]));
}

#[test]
fn specht_outputs() {
    let g = json(&["specht", "--n", "3", "--lambda", "1|2"]);
    assert_eq!(g["g"][0], serde_json::json!(["V^0*v^0", "-V^0*v^-1", "0"]));
    assert!(g.get("matrices").is_none());
    let m = json(&[
        "specht", "--n", "3", "--lambda", "3|-", "--emit", "matrices",
    ]);
    assert_eq!(m["matrices"][0]["matrix"], serde_json::json!([["V^1*v^0"]]));
    assert_eq!(m["matrices"][2]["matrix"], serde_json::json!([["V^0*v^1"]]));
}

#[test]
fn rs_shape() {
    let v = json(&["rs", "--n", "3", "--word", "s2 t"]);
    assert_eq!(v["shape"], "1.1|1");
    assert_eq!(v["window"], "[-1,3,2]");
    let text = String::from_utf8(run(&["rs", "--n", "3", "--word", "s2 t"]).stdout).unwrap();
    assert!(text.contains("shape: 1.1|1"));
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "--n", "3", "--suite", "counterexample"]);
    assert_eq!(v["passed"], true);
    let p = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "intertwiner P")
        .unwrap();
    assert!(p["detail"].as_str().unwrap().contains("not a unit"));
    let text = String::from_utf8(run(&["verify", "--n", "2"]).stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "--n", "3", "--suite", "thm3"]), 0);
    assert_eq!(code(&["cells", "--n", "3", "--order", "nonsense"]), 2);
    assert_eq!(code(&["cells", "--n", "3", "--order", "weighted:-1,1"]), 2);
    assert_eq!(code(&["cells", "--n", "3", "--side", "up"]), 2);
    assert_eq!(code(&["cellmod", "--n", "3", "--cell-of", "s7"]), 2);
    assert_eq!(
        code(&[
            "cellmod",
            "--n",
            "3",
            "--cell-of",
            "s2 t",
            "--basis",
            "s2 t,e,t"
        ]),
        2
    );
    assert_eq!(code(&["specht", "--n", "3", "--lambda", "2|2"]), 2);
    assert_eq!(
        code(&["specht", "--n", "3", "--lambda", "1|2", "--order", "revlex"]),
        2
    );
    assert_eq!(code(&["verify", "--n", "3", "--suite", "bogus"]), 2);
    assert_eq!(
        code(&["verify", "--n", "2", "--suite", "counterexample"]),
        2
    );
    assert_eq!(code(&["cells", "--n", "6"]), 3);
    assert_eq!(code(&["cells", "--n", "7", "--force"]), 3);
    assert_eq!(code(&["cells", "--n", "1"]), 3);
    assert_eq!(code(&["verify", "--n", "4"]), 3);
    assert_eq!(code(&["verify", "--n", "5", "--deep"]), 3);
    assert_eq!(code(&["rs", "--n", "3", "--word", "[1,1,2]"]), 2);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = run(&[
        "cells",
        "--n",
        "3",
        "--order",
        "weighted:1,1",
        "--cache",
        cache,
        "--format",
        "json",
    ]);
    assert!(first.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run(&[
        "cells",
        "--n",
        "3",
        "--order",
        "weighted:1,1",
        "--cache",
        cache,
        "--format",
        "json",
    ]);
    assert_eq!(first.stdout, second.stdout);
    let verify = run(&["verify", "--n", "3", "--cache", cache]);
    assert!(verify.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}
