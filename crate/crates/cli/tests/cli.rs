//! End-to-end checks of the command-line contract: flags, exit codes,
//! JSON output stability, and the word grammar.

use std::process::{Command, Output};

fn ntpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ntpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_exit_codes() {
    // success
    let out = ntpack(&["analyze", "--ledger", "b3", "--word", "s2 s1' s2 s1 s1 s1"]);
    assert_eq!(out.status.code(), Some(0));
    // budget exhausted: a single half-twist is not pseudo-Anosov
    let out = ntpack(&[
        "analyze", "--ledger", "b3", "--word", "s1", "--max-k", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // input error: unknown generator
    let out = ntpack(&["analyze", "--ledger", "b3", "--word", "s9"]);
    assert_eq!(out.status.code(), Some(1));
    // ledger validation failure: missing file parses as a path
    let out = ntpack(&["analyze", "--ledger", "/nonexistent/ledger.json", "--word", "s1"]);
    assert_eq!(out.status.code(), Some(1)); // io error -> input class
}

#[test]
fn corrupt_ledger_file_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let json = ntpack::ledger_to_json(&ntpack::builtin_b3()).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
    v["pieces"][2]["matrix"][0][1] = serde_json::json!(-1);
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = ntpack(&[
        "analyze",
        "--ledger",
        path.to_str().unwrap(),
        "--word",
        "s1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_round_trips_byte_identical() {
    let out = ntpack(&[
        "analyze",
        "--ledger",
        "ydelta",
        "--word",
        "b' a",
        "--format",
        "json",
        "--digits",
        "30",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let rerendered = serde_json::to_string_pretty(&value).unwrap() + "\n";
    assert_eq!(text, rerendered);
    assert_eq!(value["stretch_factor"]["decimal"], "2.61803398874989484820458683436");
    assert_eq!(value["cell"], "V3");
}

#[test]
fn digits_flag_controls_decimals() {
    let out = ntpack(&[
        "analyze", "--ledger", "ydelta", "--word", "b' a", "--format", "json", "--digits", "10",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["stretch_factor"]["decimal"], "2.618033988");
}

#[test]
fn evaluate_defaults_and_identities() {
    // empty word at an explicit point: identity triple
    let out = ntpack(&[
        "evaluate", "--ledger", "ydelta", "--word", "", "--point", "V1:1,0", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["end"]["cell"], "V1");
    assert_eq!(v["end"]["coords"][0], "1");
    assert_eq!(v["triple"]["matrix"][0][0], "1");
    assert_eq!(v["triple"]["matrix"][0][1], "0");

    // inverse cancellation
    let out = ntpack(&[
        "evaluate", "--ledger", "b3", "--word", "s1 s1'", "--point", "V1:3,7", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["end"]["cell"], "V1");
    assert_eq!(v["end"]["coords"][0], "3");
    assert_eq!(v["end"]["coords"][1], "7");

    // point outside its declared cell is an input error
    let out = ntpack(&["evaluate", "--ledger", "b3", "--word", "s1", "--point", "V1:-1,2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn evaluate_trace_matches_the_worked_table() {
    let out = ntpack(&[
        "evaluate",
        "--ledger",
        "b3",
        "--word",
        "s2 s1' s2 s1 s1 s1",
        "--point",
        "V1:1,2",
        "--trace",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["end"]["cell"], "V2");
    assert_eq!(v["end"]["coords"][0], "1");
    assert_eq!(v["end"]["coords"][1], "4");
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 6);
    assert_eq!(steps[0]["piece"], "V1,2");
    assert_eq!(steps[0]["letter"], "s1");
    assert_eq!(steps[5]["codomain"], "V2");
}

#[test]
fn validate_command() {
    let out = ntpack(&[
        "validate",
        "--ledger",
        "b3",
        "--relator",
        "s1 s2 s1=s2 s1 s2",
        "--samples",
        "40",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("containment"));
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));

    let out = ntpack(&["validate", "--ledger", "ydelta", "--samples", "40"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn validate_mutated_ledger_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mutated.json");
    let json = ntpack::ledger_to_json(&ntpack::builtin_ydelta()).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&json).unwrap();
    // change a's piece on V2 from [[1,1],[0,1]] to [[1,2],[0,1]]: the load
    // check cannot see it (images stay in the quadrant) but inverse
    // consistency fails
    v["pieces"][2]["matrix"][0][1] = serde_json::json!(2);
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = ntpack(&["validate", "--ledger", path.to_str().unwrap(), "--samples", "40"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("FAIL"));
    assert!(stdout(&out).contains("witness"));
}

#[test]
fn q_command() {
    let out = ntpack(&["q", "--genus", "0", "--punctures", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Q       = 2561"));
    let out = ntpack(&["q", "--genus", "2", "--punctures", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["Q"], "22465");
    // degenerate surface
    let out = ntpack(&["q", "--genus", "0", "--punctures", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn word_grammar_accepts_both_inverse_markers() {
    for word in ["s1' s2", "s1^-1 s2"] {
        let out = ntpack(&[
            "evaluate", "--ledger", "b3", "--word", word, "--point", "V1:2,3", "--format", "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "word `{word}`");
    }
}

#[test]
fn shipped_ledger_files_load_through_the_cli() {
    let root = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    for name in ["b3", "ydelta"] {
        let path = root.join("ledgers").join(format!("{name}.json"));
        let out = ntpack(&["validate", "--ledger", path.to_str().unwrap(), "--samples", "20"]);
        assert_eq!(out.status.code(), Some(0), "ledger file {name}");
    }
}
