//! End-to-end runs of the `cutgroups` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cutgroups(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutgroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_c9_reports_witness_two() {
    let out = cutgroups(&["analyze", "builtin:c9", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["is_cut"], false);
    assert_eq!(v["witness"], 2);
}

#[test]
fn chartable_c3_matches_known_rows() {
    let out = cutgroups(&["chartable", "builtin:c3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["conductor"], 3);
    let display: Vec<Vec<String>> = serde_json::from_value(v["display"].clone()).unwrap();
    assert_eq!(
        display,
        vec![
            vec!["1", "1", "1"],
            vec!["1", "z3", "-1 - z3"],
            vec!["1", "-1 - z3", "z3"],
        ]
    );
}

#[test]
fn fixture_order21_is_cut() {
    let out = cutgroups(&["analyze", "fixture:order21", "--format", "json"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = stdout_json(&out);
    assert_eq!(v["order"], 21);
    assert_eq!(v["is_cut"], true);
}

#[test]
fn fixture_dir_env_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("c3.json"),
        r#"{"name": "c3", "degree": 3, "generators": [[1, 2, 0]]}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cutgroups"))
        .args(["analyze", "fixture:c3", "--format", "json"])
        .env("CUTGROUPS_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["is_cut"], true);
}

#[test]
fn verify_theorem_suite_passes() {
    let out = cutgroups(&["verify", "--suite", "theorem", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["summary"]["passed"].as_u64().unwrap() > 0);
    for r in v["records"].as_array().unwrap() {
        if r["odd_order"] == true && r["is_cut"] == true {
            assert_eq!(r["sylow3"]["is_cut"], true, "{}", r["name"]);
            assert_eq!(r["core3"]["is_cut"], true, "{}", r["name"]);
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--max-order",
        "200",
        "--format",
        "json",
    ];
    let a = cutgroups(&[&args[..], &["--jobs", "1"]].concat());
    let b = cutgroups(&[&args[..], &["--jobs", "1"]].concat());
    let c = cutgroups(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn timings_only_on_request() {
    let args = [
        "verify",
        "--suite",
        "theorem",
        "--max-order",
        "27",
        "--format",
        "json",
    ];
    let plain = stdout_json(&cutgroups(&args));
    assert!(plain["records"][0].get("elapsed_ms").is_none());
    let timed = stdout_json(&cutgroups(&[&args[..], &["--timings"]].concat()));
    assert!(timed["records"][0]["elapsed_ms"].is_u64());
}

#[test]
fn text_format_lists_checks() {
    let out = cutgroups(&["verify", "--suite", "trichotomy", "--max-order", "21"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("frobenius21 (order 21, cut)"));
    assert!(text.contains("[pass] trichotomy"));
    assert!(text.contains("0 failed"));
}

#[test]
fn corpus_list_names_builtins() {
    let out = cutgroups(&["corpus", "list", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"double_frobenius_15309"));
    assert!(names.contains(&"c3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        cutgroups(&["verify", "--suite", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cutgroups(&["analyze", "builtin:no-such-group"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cutgroups(&["analyze", "/no/such/file.json"]).status.code(),
        Some(2)
    );
    assert_eq!(cutgroups(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn malformed_group_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"name": "bad", "degree": 3, "generators": [[0, 0, 1]]}"#,
    )
    .unwrap();
    let out = cutgroups(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("more than one point"));
}

#[test]
fn computation_failure_exits_one() {
    // S_12 is far beyond the element enumeration cap
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s12.json");
    let cycle: Vec<u32> = (1..12).chain([0]).collect();
    let swap: Vec<u32> = [1, 0].into_iter().chain(2..12).collect();
    let body = serde_json::json!({"name": "s12", "degree": 12, "generators": [cycle, swap]});
    std::fs::write(&path, body.to_string()).unwrap();
    let out = cutgroups(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enumeration cap"));
}
