use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, body: &str) -> PathBuf {
        let path = self.0.path().join(name);
        fs::write(&path, body).unwrap();
        path
    }
}

fn polycomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycomp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const S: &str = r#"{"field":{"GF":2},"rows":1,"cols":1,"entries":[[[0,1]]]}"#;

#[test]
fn eig_of_s_one() {
    let f = Files::new();
    let p = f.put(
        "p.json",
        r#"{"field":{"GF":2},"rows":1,"cols":2,"entries":[[[0,1],[1]]]}"#,
    );
    let out = polycomp(&["eig", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let es = stdout_json(&out);
    assert_eq!(es["degree"], 1);
    assert_eq!(es["rank"], 1);
    assert_eq!(es["hom_factors"][0]["alpha"], serde_json::json!([1]));
    assert_eq!(es["col_indices"], serde_json::json!([1]));
}

#[test]
fn eig_errors() {
    let f = Files::new();
    let bad = f.put("bad.json", r#"{"field":"Q","rows":1,"#);
    let out = polycomp(&["eig", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("column"), "{}", stderr(&out));

    let zero = f.put("zero.json", r#"{"field":"Q","rows":1,"cols":1,"entries":[[[]]]}"#);
    let out = polycomp(&["eig", zero.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("degree undefined"));

    let out = polycomp(&["eig", "/nonexistent/p.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let f = Files::new();
    let p = f.put("p.json", S);
    let good = f.put(
        "good.json",
        r#"{"hom_factors":[{"alpha":[0,1],"e":0}],"col_indices":[],"row_indices":[0]}"#,
    );
    let bad = f.put(
        "bad.json",
        r#"{"hom_factors":[{"alpha":[0,1],"e":0}],"col_indices":[],"row_indices":[1]}"#,
    );
    let base = ["check", p.to_str().unwrap(), "--add-rows", "1", "--target"];

    let out = polycomp(&[&base[..], &[good.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout_json(&out)["feasible"], true);

    let out = polycomp(&[&base[..], &[bad.to_str().unwrap(), "--theorem", "full"]].concat());
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["theorem"], "full");
    assert!(report["violations"].as_array().unwrap().contains(&"degree-sum".into()));

    let out = polycomp(&[&base[..], &[good.to_str().unwrap(), "--theorem", "finite"]].concat());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("finite_factors"));

    let out = polycomp(&[&base[..], &[good.to_str().unwrap(), "--theorem", "bogus"]].concat());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_writes_output_file() {
    let f = Files::new();
    let p = f.put("p.json", S);
    let t = f.put("t.json", r#"{"finite_factors":[[1]]}"#);
    let dest = f.0.path().join("report.json");
    let out = polycomp(&[
        "check",
        p.to_str().unwrap(),
        "-z",
        "1",
        "--target",
        t.to_str().unwrap(),
        "--theorem",
        "finite",
        "--output",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: Value = serde_json::from_str(&fs::read_to_string(dest).unwrap()).unwrap();
    assert_eq!(report["theorem"], "finite");
}

#[test]
fn realize_direct_and_search() {
    let f = Files::new();
    let n2 = f.put(
        "n2.json",
        r#"{"field":{"GF":2},"degree":1,"rank":2,"hom_factors":[{"alpha":[1],"e":0},{"alpha":[1],"e":2}],"col_indices":[],"row_indices":[]}"#,
    );
    let out = polycomp(&["realize", "--target", n2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout_json(&out)["entries"],
        serde_json::json!([[[1], [0, 1]], [[], [1]]])
    );

    let quad = f.put(
        "quad.json",
        r#"{"degree":2,"rank":1,"hom_factors":[{"alpha":[1,0,1],"e":0}],"col_indices":[],"row_indices":[]}"#,
    );
    let out = polycomp(&[
        "realize",
        "--target",
        quad.to_str().unwrap(),
        "--field",
        "gf2",
        "--search",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout_json(&out)["entries"], serde_json::json!([[[1, 0, 1]]]));

    let out = polycomp(&["realize", "--target", quad.to_str().unwrap(), "--field", "gf2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = polycomp(&[
        "realize",
        "--target",
        quad.to_str().unwrap(),
        "--field",
        "gf2",
        "--search",
        "--budget",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stdout_json(&out)["status"], "not found within budget");

    let bad = f.put(
        "bad.json",
        r#"{"degree":1,"rank":1,"hom_factors":[{"alpha":[1],"e":1}],"col_indices":[],"row_indices":[]}"#,
    );
    let out = polycomp(&["realize", "--target", bad.to_str().unwrap(), "--field", "Q"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["status"], "infeasible");
}

#[test]
fn budget_from_environment() {
    let f = Files::new();
    let quad = f.put(
        "quad.json",
        r#"{"field":{"GF":2},"degree":2,"rank":1,"hom_factors":[{"alpha":[1,0,1],"e":0}],"col_indices":[],"row_indices":[]}"#,
    );
    let out = Command::new(env!("CARGO_BIN_EXE_polycomp"))
        .args(["realize", "--target", quad.to_str().unwrap(), "--search"])
        .env("POLYCOMP_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn oracle_grids() {
    for grid in ["gf2 n=1 m=1 z=1 d=1", "gf2 n=2 m=1 z=1 d=1"] {
        let out = polycomp(&["oracle", "--grid", grid, "--jobs", "2"]);
        assert_eq!(out.status.code(), Some(0), "{grid}: {}", stderr(&out));
        let rep = stdout_json(&out);
        assert_eq!(rep["mismatches"], 0);
        assert!(rep["samples"].as_array().unwrap().is_empty());
    }
    let out = polycomp(&["oracle", "--grid", "gf2 n=3 m=3 z=2 d=2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("35184372088832"), "{}", stderr(&out));
    let out = polycomp(&["oracle", "--grid", "gf2 n=1"]);
    assert_eq!(out.status.code(), Some(2));
}
