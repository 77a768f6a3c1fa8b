//! End-to-end runs of the `quiverlab` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverlab")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let code = out.status.code().unwrap();
    if out.stdout.is_empty() {
        return (code, Value::Null);
    }
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\nstdout: {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (code, value)
}

fn write(dir: &Path, name: &str, value: &Value) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

fn diamond_json() -> Value {
    json!({
        "elements": ["0", "a", "b", "1"],
        "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]
    })
}

#[test]
fn verify_222_passes() {
    let (code, v) = run_json(&["verify", "xp", "--weights", "2,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    for f in ["simples", "det_cartan", "coxeter", "snf_antisym"] {
        assert!(v["equal_fields"].as_array().unwrap().contains(&json!(f)), "{f}");
    }
    assert_eq!(v["d_tilde"]["matches"], true);
}

#[test]
fn verify_333_with_ext_tables() {
    let (code, v) = run_json(&["verify", "xp", "--weights", "3,3,3", "--beilinson"]);
    assert_eq!(code, 0);
    assert_eq!(v["beilinson"]["equal"], true);
    assert_eq!(v["beilinson"]["k0_unimodular"], true);
    let (code, _) = run_json(&["verify", "xp", "--weights", "3,3,3", "--beilinson", "--window", "-1,1"]);
    assert_eq!(code, 2);
}

#[test]
fn no_poset_search_is_empty() {
    let (code, v) = run_json(&["search", "no-poset", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["matches"], json!([]));
    assert_eq!(v["candidates"], 10);
}

#[test]
fn hh_on_the_diamond() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write(dir.path(), "diamond.json", &diamond_json());
    let (code, v) = run_json(&["hh", "--poset", &poset, "--method", "both", "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["nerve"], json!([1, 0, 0]));
    assert_eq!(v["bar"], json!([1, 0, 0]));
    assert_eq!(v["agree"], true);
    let (code, _) = run_json(&["hh", "--canonical", "2,2,2", "--method", "nerve"]);
    assert_eq!(code, 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let poset = write(dir.path(), "diamond.json", &diamond_json());
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify", "xp", "--weights", "2,3,3"],
        vec!["invariants", "--poset", &poset],
        vec!["functor", "--weights", "3,3,3", "--random", "3"],
        vec!["posets", "enumerate", "--n", "4"],
        vec!["--format", "text", "verify", "t2", "--weights", "2,3"],
    ];
    for args in cases {
        let (a, b) = (run(&args), run(&args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let out = dir.path().join("out.json");
    let to_file = run(&["-o", out.to_str().unwrap(), "verify", "xp", "--weights", "2,3,3"]);
    assert!(to_file.status.success());
    assert_eq!(std::fs::read(&out).unwrap(), run(&["verify", "xp", "--weights", "2,3,3"]).stdout);
}

#[test]
fn seed_changes_random_diagrams_only() {
    let a = run(&["--seed", "1", "functor", "--weights", "3,3,4", "--random", "2"]);
    let b = run(&["--seed", "1", "functor", "--weights", "3,3,4", "--random", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn prime_fields_agree_with_the_rationals() {
    let (_, q) = run_json(&["invariants", "--canonical", "2,3,3"]);
    let (code, p) = run_json(&["--field", "fp:7", "invariants", "--canonical", "2,3,3"]);
    assert_eq!(code, 0);
    for f in ["simples", "det_cartan", "coxeter", "snf_antisym", "gldim"] {
        assert_eq!(q[f], p[f], "{f}");
    }
}

#[test]
fn enumeration_counts() {
    for (n, count) in [(3, 5), (4, 16), (5, 63)] {
        let out = run(&["posets", "enumerate", "--n", &n.to_string(), "--count-only"]);
        assert!(out.status.success());
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["count"], count, "n = {n}");
    }
}

#[test]
fn bgp_on_a_quiver_file() {
    let dir = tempfile::tempdir().unwrap();
    let q = json!({
        "vertices": ["a", "b", "c"],
        "arrows": [{"id": "x", "from": "a", "to": "b"}, {"id": "y", "from": "b", "to": "c"}]
    });
    let path = write(dir.path(), "a3.json", &q);
    let (code, v) = run_json(&["bgp", "--quiver", &path, "--vertex", "c"]);
    assert_eq!(code, 0, "{v}");
    let (code, _) = run_json(&["bgp", "--quiver", &path, "--vertex", "b"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cycle = write(dir.path(), "cycle.json", &json!({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}));
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify", "xp", "--weights", "3,2,2"],
        vec!["verify", "xp", "--weights", "2,2"],
        vec!["canonical", "--weights", "2,0,2"],
        vec!["canonical", "--weights", "2,2,2", "--lambda", "0"],
        vec!["invariants", "--poset", &cycle],
        vec!["invariants", "--poset", garbage.to_str().unwrap()],
        vec!["invariants", "--poset", "/nonexistent/file.json"],
        vec!["invariants", "--canonical", "2,2,2", "--xp", "2,2,2"],
        vec!["--field", "fp:9", "invariants", "--canonical", "2,2,2"],
        vec!["search", "no-poset", "--p", "0"],
        vec!["posets", "enumerate", "--n", "0"],
        vec!["functor", "--weights", "2,3,3"],
        vec!["no-such-command"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn text_format_renders() {
    let out = run(&["--format", "text", "verify", "xp", "--weights", "2,2,2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
