use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const K4: &str = "# K4 with a Z/3 voltage on one edge\n4 2 3\n0 1\n0 2\n0 3\n1 2\n1 3 1\n2 3\n";

fn pzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pzeta")).args(args).output().expect("pzeta runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(out: &Output) -> Value {
    assert_eq!(code(out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

/// Data rows of a CSV with `#` preamble and a header.
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().filter(|l| !l.starts_with('#')).skip(1).map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

fn k4_file(dir: &Path) -> PathBuf {
    let path = dir.join("k4.txt");
    std::fs::write(&path, K4).unwrap();
    path
}

#[test]
fn sieve_quadratic_splitting() {
    let out = pzeta(&["sieve", "--d", "5", "--cutoff", "12"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("# version: "));
    assert!(text.contains("\"quadratic\""));
    let rows = csv_rows(&text);
    let norms: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(norms, ["2", "3", "7", "11"]);
    // 11 is a square mod 5, so it splits; 2, 3, 7 are inert.
    let orders: Vec<&str> = rows.iter().map(|r| r[3].as_str()).collect();
    assert_eq!(orders, ["2", "2", "2", "1"]);
}

#[test]
fn sieve_graph_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4_file(dir.path());
    let out = pzeta(&["sieve", "--graph-file", g.to_str().unwrap(), "--cutoff", "8"]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r[1] == "8"));
}

#[test]
fn sieve_below_two_is_empty() {
    let out = pzeta(&["sieve", "--d", "5", "--cutoff", "1.5"]);
    assert_eq!(code(&out), 0);
    assert!(csv_rows(&stdout(&out)).is_empty());
}

#[test]
fn sieve_catalog_backend() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("primes.json");
    std::fs::write(&path, r#"{"group_order":3,"primes":[{"norm":5.0,"frob_class":0},{"norm":2.0,"frob_class":2}]}"#)
        .unwrap();
    let out = pzeta(&["sieve", "--catalog", path.to_str().unwrap(), "--cutoff", "10"]);
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][1..], ["2", "2", "3"]);
    assert_eq!(rows[1][1..], ["5", "0", "1"]);
}

#[test]
fn feq_check_quadratic() {
    let v = json(&pzeta(&["feq-check", "--d", "5", "--s", "2", "--cutoff", "1e5"]));
    assert_eq!(v["result"]["pass"], true);
    assert!(v["result"]["max_residual"].as_f64().unwrap() <= 1e-10);
    assert_eq!(v["config"]["params"]["cutoff"], 1e5);
    assert!(v["version"].is_string());
}

#[test]
fn feq_check_composite_cyclic() {
    // Order-6 character mod 7 (3 is a primitive root).
    let chi = r#"{"modulus":7,"order":6,"generator_values":[[3,1]]}"#;
    let v = json(&pzeta(&["feq-check", "--char", chi, "--s", "1.5+2i", "--cutoff", "1e4"]));
    let res = &v["result"]["points"][0]["residuals"];
    assert!(res["composite"].as_f64().unwrap() <= 1e-10);
    assert!(res["nested"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn failing_tolerance_exits_one() {
    let out = pzeta(&["feq-check", "--d", "5", "--s", "2", "--cutoff", "1e4", "--tolerance", "1e-30"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["pass"], false);
}

#[test]
fn boundary_on_k4_cover() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4_file(dir.path());
    let v = json(&pzeta(&["boundary", "--graph-file", g.to_str().unwrap(), "--height", "50"]));
    assert_eq!(v["result"]["verdict"], "consistent-with-natural-boundary");
}

#[test]
fn continue_guard_and_values() {
    let out = pzeta(&["continue", "--d", "5", "--depth", "1", "--s", "0.5+3i"]);
    assert_eq!(code(&out), 3);
    let out = pzeta(&["continue", "--d", "5", "--depth", "2", "--grid", "0.2:0.8:3,1:2:2"]);
    assert_eq!(code(&out), 3);

    // Depth 0 is the Euler product itself; depth 1 must agree where both apply.
    let a = json(&pzeta(&["continue", "--d", "5", "--depth", "0", "--s", "2.5+1i"]));
    let b = json(&pzeta(&["continue", "--d", "5", "--depth", "1", "--s", "2.5+1i"]));
    let la = a["result"]["points"][0]["log_abs"].as_f64().unwrap();
    let lb = b["result"]["points"][0]["log_abs"].as_f64().unwrap();
    assert!((2.0 * la - lb).abs() < 1e-9, "{la} {lb}");
}

#[test]
fn continue_grid_csv() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4_file(dir.path());
    let out_path = dir.path().join("grid.csv");
    let out = pzeta(&[
        "continue",
        "--graph-file",
        g.to_str().unwrap(),
        "--depth",
        "2",
        "--grid",
        "0.3:0.9:4,0:5:3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.lines().any(|l| l == "re,im,log_abs,arg"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.len() == 4 && r[2].parse::<f64>().unwrap().is_finite()));
}

#[test]
fn proximity_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4_file(dir.path());
    let zeros = json(&pzeta(&["zeros", "--graph-file", g.to_str().unwrap(), "--height", "3"]));
    let p = &zeros["result"]["points"][0];
    let s = format!("{}+{}i", p["re"].as_f64().unwrap(), p["im"].as_f64().unwrap());
    let out = pzeta(&["continue", "--graph-file", g.to_str().unwrap(), "--depth", "1", "--s", &s]);
    assert_eq!(code(&out), 4, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn budget_exits_five() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4_file(dir.path());
    let out = pzeta(&["sieve", "--graph-file", g.to_str().unwrap(), "--cutoff", "1e9"]);
    assert_eq!(code(&out), 5);
    let out = pzeta(&["graph", "partial", "--graph-file", g.to_str().unwrap(), "--order", "40"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn invalid_config_exits_two() {
    assert_eq!(code(&pzeta(&["sieve", "--cutoff", "10"])), 2);
    assert_eq!(code(&pzeta(&["sieve", "--d", "4", "--cutoff", "10"])), 2);
    assert_eq!(code(&pzeta(&["eval", "--d", "5", "--s", "nonsense"])), 2);
    assert_eq!(code(&pzeta(&["sieve", "--char", "{", "--cutoff", "10"])), 2);
    assert_eq!(code(&pzeta(&["sieve", "--graph-file", "/nonexistent/graph.txt", "--cutoff", "10"])), 2);
    assert_eq!(code(&pzeta(&["bogus"])), 2);
}

#[test]
fn eval_matches_reference() {
    let v = json(&pzeta(&["eval", "--d", "-3", "--s", "3+1i", "--cutoff", "1e5"]));
    let p = &v["result"]["points"][0];
    let got = &p["zeta_p"]["log"];
    let want = &p["reference_log_zeta_p"];
    let d = (got["re"].as_f64().unwrap() - want["re"].as_f64().unwrap())
        .hypot(got["im"].as_f64().unwrap() - want["im"].as_f64().unwrap());
    assert!(d <= p["zeta_p"]["tail"].as_f64().unwrap() + 1e-12);
    assert_eq!(code(&pzeta(&["eval", "--d", "5", "--s", "0.9"])), 3);
}

#[test]
fn graph_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4_file(dir.path());
    let g = g.to_str().unwrap();

    let ihara = json(&pzeta(&["graph", "ihara", "--graph-file", g]));
    assert_eq!(ihara["result"]["bass_identity"], true);
    assert_eq!(ihara["result"]["cycle_counts"][2]["primitive_classes"], "8");

    let cover = json(&pzeta(&["graph", "cover", "--graph-file", g]));
    assert_eq!(cover["result"]["vertices"], 12);
    assert_eq!(cover["result"]["connected"], true);

    let lfun = json(&pzeta(&["graph", "lfun", "--graph-file", g, "--index", "1"]));
    assert_eq!(lfun["result"]["l_functions"][0]["coefficients"][0], serde_json::json!(["1", "0"]));

    let partial = json(&pzeta(&["graph", "partial", "--graph-file", g, "--order", "12"]));
    assert_eq!(partial["result"]["agree"], true);
    assert_eq!(partial["result"]["direct"].as_array().unwrap().len(), 13);

    let verify = json(&pzeta(&["graph", "verify", "--graph-file", g]));
    assert_eq!(verify["result"]["pass"], true);
}

#[test]
fn outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4_file(dir.path());
    let runs: Vec<Vec<String>> = vec![
        vec!["zeros".into(), "--d".into(), "5".into(), "--height".into(), "26".into()],
        vec![
            "continue".into(),
            "--graph-file".into(),
            g.to_str().unwrap().into(),
            "--grid".into(),
            "0.6:0.9:3,0:4:3".into(),
        ],
        vec!["eval".into(), "--char".into(), r#"{"kronecker_d":-1}"#.into(), "--s".into(), "2-1i".into()],
    ];
    for (k, args) in runs.iter().enumerate() {
        let mut bytes = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("out_{k}_{run}"));
            let mut a: Vec<&str> = args.iter().map(String::as_str).collect();
            a.extend(["--out", path.to_str().unwrap()]);
            assert_eq!(code(&pzeta(&a)), 0, "{args:?}");
            bytes.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(bytes[0], bytes[1], "{args:?}");
        assert!(!bytes[0].is_empty());
    }
}

#[test]
fn zeros_of_quadratic_g() {
    // ζ's first zero is a zero of g of order q - 1 = 1 for d = 5; L(s, χ_5) has its first zero near 6.65.
    let v = json(&pzeta(&["zeros", "--d", "5", "--height", "15"]));
    let pts = v["result"]["points"].as_array().unwrap();
    let first_zeta = pts.iter().find(|p| p["order"] == 1).unwrap();
    assert!((first_zeta["im"].as_f64().unwrap() - 14.134725141734693).abs() < 1e-6);
    assert!(pts.iter().any(|p| p["order"] == -1));
}
