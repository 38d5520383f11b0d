use assert_cmd::Command;
use serde_json::Value;

fn dennis() -> Command {
    Command::cargo_bin("dennis").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = dennis().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_rows(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    stdout(&full)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{args:?}: {e}: {l}")))
        .collect()
}

#[test]
fn scan_to_1000() {
    let rows = json_rows(&["scan-rp", "--pmax", "1000"]);
    assert_eq!(rows.len(), 166);
    assert_eq!(rows[0]["p"], 5);
    assert_eq!(rows[0]["r_p"], 1);
    assert_eq!(rows[1]["r_p"], 2);
    assert_eq!(rows.last().unwrap()["p"], 997);
    assert!(rows.iter().filter(|r| r["p"].as_u64().unwrap() >= 23).all(|r| r["verdict"] == "ABOVE"));
}

#[test]
fn jobs_do_not_change_output() {
    for args in [
        &["scan-rp", "--pmax", "400"][..],
        &["quad-search", "--n", "3", "--alpha-max", "20", "--b-max", "20"],
        &["audit-all", "--pmax", "11"],
    ] {
        let one = stdout(&[&["--jobs", "1"][..], args].concat());
        let four = stdout(&[&["--jobs", "4"][..], args].concat());
        assert_eq!(one, four, "{args:?}");
    }
}

#[test]
fn every_subcommand_emits_json() {
    let cases: &[&[&str]] = &[
        &["scan-rp", "--pmax", "13"],
        &["mirimanoff", "--p", "7", "--t", "3"],
        &["circulant", "--p", "7", "--x", "2"],
        &["dimv", "--p", "7"],
        &["bernoulli", "--p", "37"],
        &["bernoulli", "--pmax", "60"],
        &["kummer-solutions", "--p", "7"],
        &["logderiv", "--p", "5", "--x", "2"],
        &["gamma-check", "--p", "7"],
        &["miri-identity", "--p", "5"],
        &["triangular", "--p", "5"],
        &["trace-cyclo", "--p", "5", "--x", "2"],
        &["quad-search", "--n", "3", "--alpha-max", "2", "--b-max", "5"],
        &["quad-certify", "--delta", "-104", "--n", "3", "--alpha", "2", "--b", "3"],
        &["fundamental-unit", "--delta", "321"],
        &["audit-all", "--pmax", "7"],
    ];
    for args in cases {
        let rows = json_rows(args);
        assert!(!rows.is_empty(), "{args:?}");
        assert!(rows.iter().all(Value::is_object), "{args:?}");
        let again: Vec<Value> = rows
            .iter()
            .map(|r| serde_json::from_str(&serde_json::to_string(r).unwrap()).unwrap())
            .collect();
        assert_eq!(rows, again);
    }
}

#[test]
fn spot_values() {
    assert_eq!(json_rows(&["gamma-check", "--p", "7"])[0]["holds"], true);
    assert_eq!(json_rows(&["kummer-solutions", "--p", "5"])[0]["solutions"], serde_json::json!([4]));
    let c = &json_rows(&["quad-certify", "--delta", "-104", "--n", "3", "--alpha", "2", "--b", "3"])[0];
    assert_eq!(c["verdict"], "PASS");
    assert_eq!(c["order"], 3);
    let u = &json_rows(&["fundamental-unit", "--delta", "321"])[0];
    assert_eq!((u["eps1"].as_str(), u["eps2"].as_str()), (Some("430"), Some("24")));
    let b = &json_rows(&["bernoulli", "--p", "37"])[0];
    assert_eq!(b["irregularity_index"], 1);
    let t = &json_rows(&["trace-cyclo", "--p", "5", "--x", "2"])[0];
    assert_eq!(t["match_reflected"], true);
    assert_eq!(t["match_literal"], false);
}

#[test]
fn text_and_csv() {
    let table = stdout(&["scan-rp", "--pmax", "13"]);
    assert!(table.lines().next().unwrap().starts_with("p "));
    assert_eq!(table.lines().count(), 4);
    let csv = stdout(&["--csv", "mirimanoff", "--p", "7", "--t", "3"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p,t,zero_count,r_p_of_t,values"));
    assert_eq!(lines.next(), Some("7,3,1,2,3;2;0"));
}

#[test]
fn strict_exit_codes() {
    dennis().args(["--strict", "audit-all", "--pmax", "7"]).assert().success();
    dennis().args(["--strict", "--assert", "audit-all", "--pmax", "7"]).assert().code(1);
}

#[test]
fn usage_errors() {
    dennis().arg("--bogus").assert().code(2);
    dennis().args(["scan-rp"]).assert().code(2);
    dennis().args(["--jobs", "0", "scan-rp", "--pmax", "13"]).assert().code(2);
    dennis().args(["mirimanoff", "--p", "8", "--t", "3"]).assert().code(2);
    dennis().args(["quad-certify", "--delta", "-104", "--n", "3", "--alpha", "2", "--b", "2"]).assert().code(2);
    dennis().args(["--json", "--csv", "gamma-check", "--p", "7"]).assert().code(2);
}
