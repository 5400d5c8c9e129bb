//! Command-line behavior: exit codes, output forms, and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurpf"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn omega_outputs() {
    let out = run(&["omega", "5,4,4,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "a^5 b^4 c^3 d^2\n");

    let out = run(&["omega", ""]);
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["omega", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weakly decreasing"));
}

#[test]
fn schur_outputs() {
    let out = run(&["schur", "2,1", "--vars", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x1^2 x2 + x1 x2^2\n");

    // Too many parts for the variable count is a usage error, not a zero.
    let out = run(&["schur", "1,1,1", "--vars", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["schur", "2,x", "--vars", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_outputs() {
    let out = run(&["expand", "--kind", "stanley-omega", "--n", "1", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "a x1 + a x2 + 1\n");

    let out = run(&["expand", "--kind", "nope", "--n", "1", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // Desk-scale violations surface as usage errors rather than panics.
    let out = run(&["expand", "--kind", "even-even", "--n", "8", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_exit_codes_and_json() {
    let out = run(&["check", "subs", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass"));

    let out = run(&["check", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("valid ids"));

    let out = run(&["check", "subs", "--n", "99"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "check", "fundamental", "--n", "1", "--trials", "5", "--seed", "42", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["id"], "fundamental");
    assert_eq!(v["engine"], "symbolic");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["params"]["seed"], 42);
    assert!(v["witness"].is_null());
}

#[test]
fn check_output_is_deterministic_for_fixed_seed() {
    let a = run(&["check", "msf", "--n", "1", "--trials", "4", "--seed", "7", "--json"]);
    let b = run(&["check", "msf", "--n", "1", "--trials", "4", "--seed", "7", "--json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn suite_smoke_json_roundtrip() {
    let out = run(&["suite", "--level", "smoke", "--seed", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.len() >= 18, "{} reports", arr.len());
    // Reports are ordered by check id.
    let ids: Vec<&str> = arr.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);

    let out = run(&["suite", "--level", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suite_out_file_unwritable_is_usage_error() {
    let out = run(&[
        "suite",
        "--level",
        "smoke",
        "--seed",
        "1",
        "--out",
        "/nonexistent-dir/report.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_never_panics() {
    for args in [
        vec!["omega", "0"],
        vec!["omega", ",,"],
        vec!["omega", "-3"],
        vec!["schur", "2,1", "--vars", "0"],
        vec!["check", "zn-pfaffian", "--degree", "99"],
        vec!["expand", "--kind", "macdonald", "--n", "0", "--degree", "2"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(!err.contains("panicked"), "args {args:?}: {err}");
    }
}
