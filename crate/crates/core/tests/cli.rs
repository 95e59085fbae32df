use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_clutterkit"));
    cmd.env_remove("CLUTTERKIT_BUDGET");
    cmd
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out: Output = bin().args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, String::from_utf8(out.stderr).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const CHORDAL: &str = r#"{"n":6,"d":3,"circuits":[[1,2,3],[1,2,4],[1,3,4],[2,3,4],[1,2,5],[1,2,6],[1,5,6],[2,5,6]]}"#;
const NOT_CHORDAL: &str = r#"{"n":5,"d":3,"circuits":[[1,2,3],[1,2,4],[1,3,4],[2,3,5],[2,4,5],[3,4,5]]}"#;

#[test]
fn chordal_verdicts_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", CHORDAL);
    let (code, report, _) = run(&["check-chordal", &c]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "chordal");
    assert_eq!(report["holds"], true);
    assert_eq!(report["certificate"]["elements"].as_array().unwrap().len(), 6);

    let d = write(dir.path(), "d.json", NOT_CHORDAL);
    let (code, report, _) = run(&["check-chordal", &d]);
    assert_eq!(code, 1);
    assert_eq!(report["holds"], false);
}

#[test]
fn report_has_the_documented_fields() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", CHORDAL);
    let (_, report, _) = run(&["--seed", "7", "--budget", "5000", "check-decomposable", &c]);
    for key in ["command", "input_digest", "verdict", "holds", "result", "certificate", "timings_ms", "stats", "seed", "budget"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report["seed"], 7);
    assert_eq!(report["budget"], 5000);
    assert_eq!(report["input_digest"].as_str().unwrap().len(), 64);
    assert_eq!(report["certificate"]["kind"], "union");
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", CHORDAL);
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timings_ms");
        v
    };
    let (_, a, _) = run(&["check-decomposable", &c]);
    let (_, b, _) = run(&["check-decomposable", &c]);
    assert_eq!(strip(a), strip(b));
    let (_, a, _) = run(&["--seed", "3", "random-decomposable", "--n", "6", "--d", "3"]);
    let (_, b, _) = run(&["--seed", "3", "random-decomposable", "--n", "6", "--d", "3"]);
    assert_eq!(strip(a), strip(b));
}

#[test]
fn malformed_json_exits_3_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"n\": 3,\n \"d\": 2,\n \"circuits\": [[1,2],[2,]]}");
    let (code, report, stderr) = run(&["check-chordal", &bad]);
    assert_eq!(code, 3);
    assert_eq!(report, Value::Null);
    assert!(stderr.contains("line 3 column"), "{stderr}");

    let out_of_range = write(dir.path(), "r.json", r#"{"n":3,"d":2,"circuits":[[1,7]]}"#);
    assert_eq!(run(&["check-chordal", &out_of_range]).0, 3);
    assert_eq!(run(&["check-chordal", "/nonexistent/file.json"]).0, 3);
    assert_eq!(run(&["no-such-command"]).0, 3);
}

#[test]
fn exhausted_budget_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "d.json", NOT_CHORDAL);
    let (code, report, _) = run(&["--budget", "1", "check-decomposable", &d]);
    assert_eq!(code, 2);
    assert_eq!(report["verdict"], "exhausted");
    assert_eq!(report["holds"], Value::Null);
}

#[test]
fn budget_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "d.json", NOT_CHORDAL);
    let out = bin()
        .env("CLUTTERKIT_BUDGET", "1")
        .args(["check-decomposable", &d])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certificates_go_to_the_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", CHORDAL);
    let certs = dir.path().join("certs");
    let (code, report, _) = run(&["--output-dir", certs.to_str().unwrap(), "check-chordal", &c]);
    assert_eq!(code, 0);
    assert!(report.get("certificate").is_none());
    let path = report["certificate_path"].as_str().unwrap();
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(cert["elements"].as_array().unwrap().len(), 6);
}

#[test]
fn ideal_commands() {
    let dir = tempfile::tempdir().unwrap();
    // The five-cycle edge ideal: no linear quotients, non-linear resolution.
    let c5 = write(dir.path(), "c5.json", r#"{"n":5,"sets":[[1,2],[2,3],[3,4],[4,5],[1,5]]}"#);
    assert_eq!(run(&["check-linear-quotients", &c5]).0, 1);
    assert_eq!(run(&["find-lq-order", &c5]).0, 1);
    let (code, report, _) = run(&["betti", &c5]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["regularity"], 3);

    let path = write(dir.path(), "p.json", r#"{"n":4,"generators":[[1,1,0,0],[0,1,1,0],[0,0,1,1]]}"#);
    assert_eq!(run(&["check-linear-quotients", &path]).0, 0);
    let (code, report, _) = run(&["--field", "F2", "betti", "--power", "2", &path]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["betti"]["field"], "F2");

    let (code, report, _) = run(&["recognize", "stable", &c5]);
    assert_eq!(code, 1);
    assert!(!report["result"]["violations"].as_array().unwrap().is_empty());
    let stable = write(dir.path(), "s.json", r#"{"n":3,"sets":[[1,2],[1,3]]}"#);
    assert_eq!(run(&["recognize", "strongly-stable", &stable]).0, 0);
    assert_eq!(run(&["recognize", "lex", &stable]).0, 0);
    assert_eq!(run(&["recognize", "matroidal", &stable]).0, 0);
}

#[test]
fn complex_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "path.json", r#"{"n":4,"facets":[[1,2],[2,3],[3,4]]}"#);
    assert_eq!(run(&["check-shelling", "--find", &path]).0, 0);
    let bad = write(dir.path(), "o.json", "[[1,2],[3,4],[2,3]]");
    let (code, report, _) = run(&["check-shelling", &path, "--order", &bad]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["first_failure"], 2);
    let disjoint = write(dir.path(), "dis.json", r#"{"n":4,"facets":[[1,2],[3,4]]}"#);
    assert_eq!(run(&["check-shelling", &disjoint]).0, 1);
    assert_eq!(run(&["check-extendable", &path]).0, 0);
    let (code, report, _) = run(&["check-extendable", &disjoint]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["verdict"], "not-extendable");

    let (code, report, _) = run(&["recognize", "quasiforest", &path, "--skeleton", "1"]);
    assert_eq!(code, 0);
    assert_eq!(report["certificate"]["kind"], "union");
    let square = write(dir.path(), "sq.json", r#"{"n":4,"facets":[[1,2],[2,3],[3,4],[1,4]]}"#);
    assert_eq!(run(&["recognize", "quasiforest", &square]).0, 1);
}

#[test]
fn simon_verify_single_pair() {
    let (code, report, _) = run(&["simon-verify", "--n", "5", "--d", "3"]);
    assert_eq!(code, 0);
    let reports = report["result"]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["equivalence_holds"], true);
    assert_eq!(run(&["simon-verify", "--n", "9", "--d", "3"]).0, 2);
}

#[test]
fn every_named_example_matches_its_pinned_verdict() {
    for name in ["figure2-C", "figure2-D", "figure3", "umbrella", "ex-lq-not-decomposable", "ex2", "ex2-square"] {
        let (code, report, stderr) = run(&["paper-example", name]);
        assert_eq!(code, 0, "{name}: {report} {stderr}");
        assert_eq!(report["verdict"], "matches-pinned");
    }
    let (_, report, _) = run(&["paper-example", "ex-lq-not-decomposable"]);
    let checks = report["result"]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["check"] == "decomposable" && c["observed"] == "refuted"));
}
