use std::fs;
use std::process::Command;

use clap::Parser;
use serde_json::Value;

use zerosum_cli::error::CliError;
use zerosum_cli::files;
use zerosum_cli::{run, Cli};

fn json(args: &[&str]) -> Value {
    let cli = Cli::try_parse_from(["zerosum", "--format", "json"].iter().chain(args)).unwrap();
    let mut out = Vec::new();
    run(&cli, &mut out).unwrap();
    serde_json::from_slice(&out).unwrap()
}

fn binary(args: &[&str], threads: Option<&str>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zerosum"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("ZS_THREADS", t);
    }
    let out = cmd.output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn bound_examples() {
    assert_eq!(json(&["bound", "complete", "--n", "6", "--r", "3"])["value"], "4/1");
    let v = json(&["bound", "complete-partite", "--r", "3", "--n", "2"]);
    assert_eq!(v["value"], "2/1");
    assert_eq!(v["attained"], true);
    let v = json(&["bound", "balogh-smyth", "--r", "3", "--n", "2", "--D", "1", "--alpha", "0"]);
    let x: f64 = v["value"].as_str().unwrap().parse().unwrap();
    assert!((x - 2.3094).abs() < 1e-4);
    let v = json(&["bound", "balogh-smyth", "--r", "2", "--n", "3", "--D", "1/2", "--alpha", "-1/2"]);
    assert!(v["value"].as_str().unwrap().starts_with("1.590990257"));
}

#[test]
fn complete_bound_reports_both_centers() {
    let v = json(&["bound", "complete", "--n", "5", "--r", "3"]);
    assert_eq!(v["value"], "4/3");
    assert_eq!(v["literal_value"], "8/3");
    assert_eq!(v["attained"], true);
}

#[test]
fn construct_examples() {
    let v = json(&["construct", "majority", "--n", "6", "--r", "3"]);
    assert_eq!(v["unbalancedness"], "4/1");
    assert_eq!(v["sum"], "0/1");
    assert_eq!(v["attained"], true);
    let v = json(&["construct", "equipartite-threshold", "--r", "2", "--n", "4", "--k", "2"]);
    assert_eq!(v["unbalancedness"], "2/1");
    let v = json(&["construct", "majority", "--n", "5", "--r", "2"]);
    assert_eq!(v["zero_sum"], false);
    assert!(!v["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn solve_examples() {
    assert_eq!(json(&["solve", "lp", "--complete", "4", "2"])["value"], "1/1");
    let v = json(&["solve", "enumerate", "--complete", "4", "2"]);
    assert_eq!(v["value"], "1/1");
    assert_eq!(v["explored"], 20);
    let v = json(&["solve", "reduced", "--complete", "5", "2"]);
    assert_eq!(v["value"], "4/3");
    assert_eq!(v["agrees"], true);
    assert_eq!(json(&["solve", "enumerate", "--equipartite", "3", "2"])["value"], "2/1");
}

#[test]
fn emitted_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("maj").to_string_lossy().into_owned();
    json(&["construct", "equipartite-majority", "--r", "3", "--n", "2", "--emit", &prefix]);
    let h_text = fs::read_to_string(format!("{prefix}.hypergraph.json")).unwrap();
    let f_text = fs::read_to_string(format!("{prefix}.weighting.json")).unwrap();
    assert!(h_text.ends_with('\n') && f_text.ends_with('\n'));
    let h = files::hypergraph_from_str(&h_text).unwrap();
    let f = files::weighting_from_str(&f_text).unwrap();
    assert_eq!(files::hypergraph_to_string(&h), h_text);
    assert_eq!(files::weighting_to_string(&f), f_text);
    assert_eq!(zerosum::hypergraph::unbalancedness(&h, &f).unwrap(), zerosum::arith::int(2));

    let v = json(&["solve", "lp", "--file", &format!("{prefix}.hypergraph.json")]);
    assert_eq!(v["value"], "2/1");
}

#[test]
fn table_grid() {
    let rows = json(&["table", "--n-min", "3", "--n-max", "6", "--r-min", "2", "--r-max", "3"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let row = rows.iter().find(|r| r["n"] == 4 && r["r"] == 2).unwrap();
    assert_eq!(row["complete_bound"], "1/1");
    assert_eq!(row["lp"], "1/1");
    assert_eq!(row["lp_equal"], true);
    let row = rows.iter().find(|r| r["n"] == 5 && r["r"] == 2).unwrap();
    assert_eq!(row["complete_bound"], "4/3");
    assert_eq!(row["lp"], "4/3");
}

#[test]
fn csv_table_is_stable() {
    let args = ["table", "--family", "equipartite", "--n-max", "3", "--r-max", "3", "--format", "csv"];
    let (code, first) = binary(&args, None);
    assert_eq!(code, 0);
    let (_, second) = binary(&args, Some("1"));
    assert_eq!(first, second);
    assert!(first.starts_with("r,n,edges,complete_partite_bound,equipartite_bound,balogh_smyth,"));
    assert_eq!(first.lines().count(), 1 + 2 * 2);
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "monotonicity", "--n-max", "12", "--r-max", "5"],
        vec!["verify", "oracle-vs-bound", "--n-max", "5"],
        vec!["verify", "shifts", "--trials", "50", "--seed", "7"],
        vec!["verify", "symmetry", "--trials", "60"],
        vec!["verify", "constructions", "--n-max", "8", "--r-max", "3"],
    ] {
        let rows = json(&args);
        for row in rows.as_array().unwrap() {
            assert_eq!(row["passed"], true, "{row}");
        }
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let odd = dir.path().join("odd_edges.json");
    fs::write(&odd, "{\"n\":3,\"r\":2,\"edges\":[[0,1],[0,2],[1,2]]}\n").unwrap();
    let odd = odd.to_string_lossy().into_owned();

    assert_eq!(binary(&["bound", "complete", "--n", "4", "--r", "2"], None).0, 0);
    assert_eq!(binary(&["solve", "enumerate", "--file", &odd], None).0, 2);
    assert_eq!(binary(&["solve", "enumerate", "--complete", "8", "4"], None).0, 3);
    assert_eq!(binary(&["solve", "lp", "--complete", "17", "2"], None).0, 3);
    assert_eq!(binary(&["bound", "complete", "--n", "3", "--r", "4"], None).0, 1);
    assert_eq!(binary(&["construct", "equipartite-majority", "--r", "2", "--n", "2"], None).0, 1);
    assert_eq!(binary(&["solve", "lp"], None).0, 1);
    assert_eq!(binary(&["solve", "lp", "--file", "/nonexistent.json"], None).0, 1);
    assert_eq!(binary(&["bound", "complete", "--n", "4", "--r", "2"], Some("zero")).0, 1);
    assert_eq!(binary(&["--help"], None).0, 0);
    assert_eq!(CliError::VerifyFailed { failed: 1, total: 3 }.exit_code(), 4);
}

#[test]
fn lp_witness_is_thread_independent() {
    let args = ["solve", "lp", "--complete", "5", "3", "--format", "json"];
    let (_, a) = binary(&args, Some("1"));
    let (_, b) = binary(&args, Some("4"));
    assert_eq!(a, b);
}
