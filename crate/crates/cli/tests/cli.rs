use std::path::PathBuf;
use std::process::Command;

use eigenweights_cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("eigenweights").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    assert_eq!(o.code, 0, "stderr: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn a4_second_fundamental() {
    let v = json(&cli(&["invariants", "--dual-type", "A4", "--weight", "0,1,0,0"]));
    assert_eq!(v["epsilon"], serde_json::json!(["14", "6", "9", "13"]));
    assert_eq!(v["deg"], "5");
    assert_eq!(v["d"], 6);
    assert_eq!(v["provenance"], "explicit-classical");
}

#[test]
fn g2_quasi_minuscule() {
    let v = json(&cli(&["invariants", "--dual-type", "G2", "--quasi-minuscule"]));
    assert_eq!(v["epsilon"], serde_json::json!(["108", "108"]));
    assert_eq!(v["b"], "108");
}

#[test]
fn zero_weight_report() {
    let v = json(&cli(&["invariants", "--dual-type", "A2", "--weight", "0,0"]));
    assert_eq!(v["d"], 0);
    assert_eq!(v["deg"], "1");
    assert_eq!(v["epsilon"], serde_json::json!(["0", "0"]));
    assert_eq!(v["b"], "0");
}

#[test]
fn type_flag_dualizes() {
    let a = json(&cli(&["invariants", "--type", "C3", "--weight", "0,1,0", "--no-b"]));
    let b = json(&cli(&["invariants", "--dual-type", "B3", "--weight", "0,1,0", "--no-b"]));
    assert_eq!(a, b);
    assert_eq!(a["type"], "B3");
}

#[test]
fn both_routes_agree() {
    let v = json(&cli(&["invariants", "--dual-type", "D4", "--weight", "0,0,0,1", "--route", "both", "--no-b"]));
    assert_eq!(v["epsilon_block"]["slots"], serde_json::json!([2, 4]));
    let c = json(&cli(&["invariants", "--dual-type", "B3", "--weight", "0,0,1", "--route", "closed-form"]));
    assert_eq!(c["provenance"], "closed-form");
}

#[test]
fn other_formats() {
    let h = cli(&["invariants", "--dual-type", "A2", "--weight", "1,0", "--format", "human"]);
    assert_eq!(h.code, 0);
    assert!(h.stdout.contains("A2"));
    let c = cli(&["invariants", "--dual-type", "A2", "--weight", "1,0", "--format", "csv"]);
    assert_eq!(c.code, 0);
    assert_eq!(c.stdout.lines().count(), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["invariants", "--dual-type", "B3", "--weight", "1,0,1"];
    assert_eq!(cli(&args), cli(&args));
    let t = ["tables", "--table", "classical-rank-2", "--format", "json"];
    assert_eq!(cli(&t), cli(&t));
}

#[test]
fn out_file() {
    let path = tmp("a3.json");
    let o = cli(&["invariants", "--dual-type", "A3", "--weight", "0,1,0", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["deg"], "2");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        vec!["invariants", "--dual-type", "A2", "--weight", "1,-1"],
        vec!["invariants", "--dual-type", "A2", "--weight", "1,0,0"],
        vec!["invariants", "--dual-type", "X9", "--weight", "1"],
        vec!["invariants", "--weight", "1,0"],
        vec!["invariants", "--dual-type", "F4", "--minuscule"],
        vec!["invariants", "--dual-type", "A2", "--weight", "1,1", "--route", "closed-form"],
        vec!["tables", "--table", "missing"],
        vec!["volume", "--dual-type", "A1", "--q", "6", "--weight", "1", "--order", "2"],
        vec!["frobnicate"],
    ] {
        let o = cli(&args);
        assert_eq!(o.code, 2, "{:?}: {}", args, o.stderr);
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn dimension_cap_exits_3() {
    let o = cli(&["invariants", "--dual-type", "A2", "--weight", "3,3", "--dim-cap", "50"]);
    assert_eq!(o.code, 3, "{}", o.stderr);
}

#[test]
fn table_check_exits_4_on_the_erratum() {
    let o = cli(&["tables", "--table", "classical-rank-4", "--check"]);
    assert_eq!(o.code, 4);
    assert!(o.stdout.contains("FAIL classical-rank-4 B4 w2 epsilon[1] [matrix] expected 132800768 got 32800768"));
    assert!(o.stdout.contains("documented erratum"));
    assert!(o.stderr.contains("2 cell(s) differ"));
    let ok = cli(&["tables", "--table", "classical-rank-3", "--table", "classical-rank-2", "--check"]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
}

#[test]
fn table_csv() {
    let o = cli(&["tables", "--table", "classical-rank-1"]);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.stdout,
        "table,type,weight,lambda,route,deg,d,epsilon,b\n\
         classical-rank-1,A1,w1,1,matrix,1,1,\"(1)\",\n\
         classical-rank-1,A1,w1,1,closed-form,1,1,\"(1)\",\n"
    );
}

#[test]
fn volume_empty_product() {
    let v = json(&cli(&["volume", "--dual-type", "A2", "--q", "2"]));
    assert_eq!(v["value"], "1/21");
    assert_eq!(v["r"], 0);
    assert_eq!(v["forms_agree"], true);
    assert_eq!(v["label"], "formula value");
}

#[test]
fn volume_two_legs() {
    let a = json(&cli(&["volume", "--dual-type", "A1", "--q", "2", "--legs", "1;1"]));
    let b = json(&cli(&["volume", "--dual-type", "A1", "--q", "2", "--legs", "1", "--legs", "1"]));
    let c = json(&cli(&["volume", "--dual-type", "A1", "--q", "2", "--weight", "1", "--order", "2"]));
    assert_eq!(a["value"], "46/27");
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a["forms_agree"], true);
}

#[test]
fn volume_nonzero_class() {
    let v = json(&cli(&["volume", "--dual-type", "A2", "--q", "3", "--legs", "1,0;1,0"]));
    assert_eq!(v["value"], "0");
    assert_eq!(v["pi1_class_zero"], false);
}

#[test]
fn volume_from_curve_file() {
    let path = tmp("genus1.json");
    std::fs::write(&path, r#"{"q": 3, "genus": 1, "numerator": [1, -2, 3]}"#).unwrap();
    let v = json(&cli(&["volume", "--dual-type", "A1", "--curve", path.to_str().unwrap()]));
    assert_eq!(v["value"], "11/4");
    let bad = tmp("bad.json");
    std::fs::write(&bad, r#"{"q": 3, "genus": 1, "numerator": [1, -2, 4]}"#).unwrap();
    assert_eq!(cli(&["volume", "--dual-type", "A1", "--curve", bad.to_str().unwrap()]).code, 2);
    let hasse = tmp("hasse.json");
    std::fs::write(&hasse, r#"{"q": 2, "genus": 1, "numerator": [1, 3, 2]}"#).unwrap();
    let o = cli(&["volume", "--dual-type", "A1", "--curve", hasse.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stderr.contains("warning"));
}

#[test]
fn volume_non_commuting_family() {
    let o = cli(&["volume", "--dual-type", "D4", "--q", "2", "--legs", "1,0,0,0;1,0,0,0;0,0,0,1;0,0,0,1"]);
    assert_eq!(o.code, 2, "{}", o.stderr);
    assert!(o.stderr.contains("commute"));
}

#[test]
fn selfcheck_passes() {
    let o = cli(&["selfcheck", "--max-rank", "3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("checks pass"));
}

#[test]
fn help_exits_0() {
    let o = cli(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("invariants"));
}

#[test]
fn binary_exit_codes_and_thread_variable() {
    let bin = env!("CARGO_BIN_EXE_eigenweights");
    let out = Command::new(bin).args(["invariants", "--dual-type", "A4", "--weight", "0,1,0,0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["deg"], "5");
    let out = Command::new(bin)
        .env("EIGENWEIGHTS_THREADS", "0")
        .args(["invariants", "--dual-type", "A1", "--weight", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin)
        .env("EIGENWEIGHTS_THREADS", "2")
        .args(["tables", "--table", "classical-rank-2", "--check"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["invariants", "--dual-type", "A2", "--weight", "3,3", "--dim-cap", "10"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}
