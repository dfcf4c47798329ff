use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympbranch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, bool) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    (
        serde_json::from_slice(&out.stdout).expect("valid json"),
        out.status.success(),
    )
}

#[test]
fn mult_reports_dimension_and_factors() {
    let (v, ok) = json(&["mult", "2,1,0/2,0"]);
    assert!(ok);
    assert_eq!(v["status"], "OK");
    assert_eq!(v["results"]["dim"], 2);
    assert_eq!(v["results"]["r"], serde_json::json!([0, 1, 0]));

    let (v, _) = json(&["mult", "4,2,0/2,0"]);
    assert_eq!(v["results"]["dim"], 9);
    assert_eq!(v["results"]["r"], serde_json::json!([2, 2, 0]));
    assert_eq!(v["results"]["order_types"].as_array().unwrap().len(), 4);
}

#[test]
fn mult_off_the_semigroup_is_zero_and_ok() {
    let out = run(&["mult", "1,0/3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim          0"), "{text}");
    assert!(text.contains("status OK"));
}

#[test]
fn basis_lists_weights() {
    let (v, ok) = json(&["basis", "2,1,0/2,0"]);
    assert!(ok);
    let recs = v["results"].as_array().unwrap();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["weight"], serde_json::json!([0, 1, 0]));
    assert_eq!(recs[1]["weight"], serde_json::json!([0, -1, 0]));
    assert_eq!(recs[1]["gamma"], serde_json::json!([2, 0, 0]));
    assert_eq!(recs[1]["lambda"], serde_json::json!([2, 1, 0]));
    assert_eq!(recs[1]["mu"], serde_json::json!([2, 0]));

    let (v, _) = json(&["basis", "0,0/0"]);
    assert_eq!(v["results"][0]["weight"], serde_json::json!([0, 0]));
    let (v, _) = json(&["basis", "4,2,0/2,0"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 9);
}

#[test]
fn basis_rejects_zero_multiplicity() {
    let out = run(&["basis", "1,0/3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("branching semigroup"));
}

#[test]
fn branch_tables() {
    let (v, ok) = json(&["branch", "1,0"]);
    assert!(ok);
    assert_eq!(
        v["results"]["table"],
        serde_json::json!([{"mu": [1], "multiplicity": 1}, {"mu": [0], "multiplicity": 2}])
    );
    let (v, _) = json(&["branch", "0,0"]);
    assert_eq!(
        v["results"]["table"],
        serde_json::json!([{"mu": [0], "multiplicity": 1}])
    );

    let out = run(&["branch", "2,1,0", "--check"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dimension check  passed"));
}

#[test]
fn parse_errors_name_the_violation() {
    let out = run(&["mult", "1,2/0"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("entry 1 (1) is smaller than entry 2 (2)"), "{err}");

    assert!(!run(&["branch", "a,b"]).status.success());
    assert!(!run(&["mult", "2,1,0"]).status.success());
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--max-rank", "3", "--max-entry", "3", "--suite", "characters"][..],
        &["verify", "--max-rank", "1", "--suite", "all"][..],
        &["verify", "--max-rank", "2", "--max-entry", "2", "--suite", "decomp"][..],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).contains("status OK"));
    }
}

#[test]
fn verify_rank_four_semigroup() {
    let out = Command::new(env!("CARGO_BIN_EXE_sympbranch"))
        .args([
            "verify",
            "--max-rank",
            "4",
            "--max-entry",
            "3",
            "--suite",
            "semigroup",
            "--json",
        ])
        .env("SYMPBRANCH_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "OK");
    assert!(v["results"]["first_failure"].is_null());
}

#[test]
fn verify_rejects_bad_arguments() {
    assert!(!run(&["verify", "--max-rank", "0"]).status.success());
    assert!(!run(&["verify", "--suite", "everything"]).status.success());
}

#[test]
fn output_is_deterministic() {
    let a = run(&["branch", "3,2,1", "--json"]);
    let b = run(&["branch", "3,2,1", "--json"]);
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&b));
}
