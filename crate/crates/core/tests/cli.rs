use std::path::PathBuf;
use std::process::Command;

use kakutani::cli::run;
use kakutani::io::parse_subspace;
use serde_json::Value;

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

fn call(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["kakutani"];
    full.extend_from_slice(args);
    let out = run(full);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).unwrap())
}

#[test]
fn analyze_line() {
    let (code, doc) = call(&["analyze", &corpus("line.json")]);
    assert_eq!(code, 0);
    assert_eq!(doc["is_sublattice"], true);
    assert_eq!(doc["is_subalgebra"], false);
    assert_eq!(doc["relations_lattice"], serde_json::json!([{"t": "x", "s": "y", "lambda": "1/2"}]));
    assert_eq!(doc["witness"], Value::Null);
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["seed"], 0);
}

#[test]
fn analyze_affine_grid_fails_with_witness() {
    let (code, doc) = call(&["analyze", &corpus("affine_grid3.json")]);
    assert_eq!(code, 1);
    assert_eq!(doc["is_sublattice"], false);
    assert_eq!(doc["witness"]["op"], "max");
    let (code, _) = call(&["analyze", &corpus("affine_grid2.json")]);
    assert_eq!(code, 0);
}

#[test]
fn analyze_constants_in_algebra_mode() {
    let (code, doc) = call(&["analyze", "--mode", "algebra", &corpus("constants.json")]);
    assert_eq!(code, 0);
    assert_eq!(doc["is_subalgebra"], true);
    assert_eq!(doc["separates_points"], false);
    assert_eq!(doc["non_separated_pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn mode_flag_overrides_document() {
    // the document asks for algebra mode; the line is not a subalgebra but is a sublattice
    let (code, _) = call(&["relations", "--mode", "lattice", &corpus("partition_algebra.json")]);
    assert_eq!(code, 0);
    let (code, doc) = call(&["relations", &corpus("line.json"), "--mode", "algebra"]);
    assert_eq!(code, 1);
    assert_eq!(doc["relations"], serde_json::json!([]));
}

#[test]
fn hull_and_witness_commands() {
    let (code, doc) = call(&["hull", &corpus("plane_r3.json")]);
    assert_eq!(code, 1);
    assert_eq!(doc["hull"], serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]));

    let (code, doc) = call(&["witness", &corpus("mixed_line.json"), "--seed", "3", "--budget", "10"]);
    assert_eq!(code, 1);
    assert_eq!(doc["witness"]["f"], serde_json::json!(["-1", "2"]));
    assert_eq!(doc["witness"]["combined"], serde_json::json!(["-2", "2"]));
    assert_eq!(doc["seed"], 3);

    let (code, doc) = call(&["witness", &corpus("line.json")]);
    assert_eq!(code, 0);
    assert_eq!(doc["witness"], Value::Null);
}

#[test]
fn check_member_reports_both_routes() {
    let (code, doc) = call(&["check-member", &corpus("plane_r3.json"), "--function", "1,1,1"]);
    assert_eq!(code, 1);
    assert_eq!(doc["member"], false);
    assert_eq!(doc["member_by_pairs"], true);
    let (code, doc) = call(&["check-member", &corpus("line.json"), "--function", "-2,-4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["member_by_pairs"], true);
}

#[test]
fn dot_command() {
    let out = run(["kakutani", "dot", &corpus("line.json")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("digraph relations {"));
    assert!(out.stdout.contains("\"x\" -> \"y\" [label=\"λ=1/2\"];"));
}

#[test]
fn c0_interpretation() {
    let (code, doc) = call(&["relations", &corpus("c0_line.json")]);
    assert_eq!(code, 0);
    assert_eq!(doc["points"], serde_json::json!(["t1", "t2"]));
    assert_eq!(doc["relations"], serde_json::json!([{"t": "t1", "s": "t2", "lambda": "1/2"}]));

    let (code, doc) = call(&["analyze", &corpus("c0_constants.json")]);
    assert_eq!(code, 0);
    assert_eq!(doc["c0"]["infinity_label"], "inf");
    assert_eq!(doc["points"].as_array().unwrap().len(), 4);
    assert_eq!(doc["c0"]["relations"].as_array().unwrap().len(), 3);

    // a base point named like the default infinity label must be renamed
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("clash.json");
    std::fs::write(&path, r#"{"points":["a","∞"],"generators":[["1","1"]]}"#).unwrap();
    let out = run(["kakutani", "analyze", "--c0", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    let out = run(["kakutani", "analyze", "--c0", "--infinity-label", "omega", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("decimal.json", r#"{"points":["x","y"],"generators":[["0.5","1"]]}"#, "exact fractions required"),
        ("dup.json", r#"{"points":["x","x"],"generators":[]}"#, "duplicate"),
        ("ragged.json", r#"{"points":["x","y"],"generators":[["1"]]}"#, "dimension mismatch"),
    ];
    for (name, body, needle) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let out = run(["kakutani", "analyze", path.to_str().unwrap()]);
        assert_eq!(out.code, 2, "{name}");
        assert!(out.stderr.contains(needle), "{name}: {}", out.stderr);
    }
    assert_eq!(run(["kakutani", "analyze", "/nonexistent.json"]).code, 2);
    assert_eq!(run(["kakutani", "frobnicate"]).code, 2);
    let out = run(["kakutani", "check-member", &corpus("line.json"), "--function", "1,2,3"]);
    assert_eq!(out.code, 2);
}

#[test]
fn echoed_input_reparses_to_the_same_basis() {
    for name in ["line.json", "affine_grid3.json", "weighted_chain.json", "zero_point.json"] {
        let path = corpus(name);
        let (_, doc) = call(&["analyze", &path]);
        let echoed = serde_json::to_vec(&doc["input"]).unwrap();
        let original = parse_subspace(&std::fs::read(&path).unwrap()).unwrap();
        let reparsed = parse_subspace(&echoed).unwrap();
        assert_eq!(reparsed.subspace, original.subspace, "{name}");
    }
}

#[test]
fn binary_exit_codes_follow_the_decision() {
    let bin = env!("CARGO_BIN_EXE_kakutani");
    let status = |file: &str| Command::new(bin).args(["analyze", &corpus(file)]).status().unwrap().code();
    assert_eq!(status("line.json"), Some(0));
    assert_eq!(status("plane_r3.json"), Some(1));
    let out = Command::new(bin).args(["analyze", "missing.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
