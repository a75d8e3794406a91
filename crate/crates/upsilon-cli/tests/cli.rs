//! End-to-end tests of the `upsilon` binary: exit codes, payload shapes,
//! and the file-resolution fallbacks.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use upsilon_cli::document::parse_complex;

fn upsilon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("upsilon-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

#[test]
fn eval_matches_paper_value() {
    let out = upsilon(&["eval", "examples/t37.json", "--t", "4/5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "-4");
}

#[test]
fn tau_of_trefoil() {
    let out = upsilon(&["tau", "examples/t23.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn nu_minus_of_t37() {
    let out = upsilon(&["nu-minus", "examples/t37.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "6");
}

#[test]
fn unknown_command_prints_usage_and_exits_2() {
    let out = upsilon(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Usage"));
}

#[test]
fn missing_file_exits_2() {
    let out = upsilon(&["tau", "no/such/file.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no such file"));
}

#[test]
fn malformed_json_reports_position_and_exits_2() {
    let dir = scratch_dir("syntax");
    let path = dir.join("broken.json");
    fs::write(&path, "{\"name\": \"x\", \"generators\": [}").unwrap();
    let out = upsilon(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("syntax error"));
    assert!(stderr(&out).contains("line"));
}

#[test]
fn dangling_target_exits_2() {
    let dir = scratch_dir("dangling");
    let path = dir.join("dangling.json");
    fs::write(
        &path,
        r#"{
            "name": "bad",
            "generators": [{"id": "x", "maslov": 1, "alg": 1, "alex": 1}],
            "differential": [{"from": "x", "to": ["ghost"]}]
        }"#,
    )
    .unwrap();
    let out = upsilon(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ghost"));
}

#[test]
fn validate_rejects_non_admissible_complex() {
    let dir = scratch_dir("inadmissible");
    let path = dir.join("rank2.json");
    fs::write(
        &path,
        r#"{
            "name": "two-classes",
            "generators": [
                {"id": "a", "maslov": 0, "alg": 0, "alex": 0},
                {"id": "b", "maslov": 0, "alg": 0, "alex": 0}
            ]
        }"#,
    )
    .unwrap();
    let out = upsilon(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("homology rank"));
}

#[test]
fn validate_accepts_bundled_examples() {
    for name in ["unknot", "t23", "t25", "t37", "t23_sum_t23"] {
        let out = upsilon(&["validate", name]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&out).trim(), "admissible");
    }
}

#[test]
fn upsilon_csv_has_exact_and_approx_columns() {
    let out = upsilon(&["upsilon", "examples/t23.json", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,value,approx"));
    assert_eq!(lines.next(), Some("0,0,0"));
    assert_eq!(lines.next(), Some("1,-1,-1"));
    assert_eq!(lines.next(), Some("2,0,0"));
}

#[test]
fn upsilon_json_carries_result_envelope() {
    let out = upsilon(&["upsilon", "examples/t37.json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["invariant"], "upsilon");
    assert_eq!(doc["input"], "t37");
    assert_eq!(doc["payload"]["kind"], "pl");
    let vertices = doc["payload"]["vertices"].as_array().unwrap();
    assert_eq!(vertices[1]["t"], "2/3");
    assert_eq!(vertices[1]["value"], "-4");
    assert!(doc["engine_version"].is_string());
}

#[test]
fn sum_emits_a_valid_complex_document() {
    let out = upsilon(&["sum", "examples/t23.json", "examples/t23.json"]);
    assert_eq!(out.status.code(), Some(0));
    let (name, complex) = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(name, "t23#t23");
    assert_eq!(complex.generators().len(), 9);
}

#[test]
fn mirror_emits_a_valid_complex_document() {
    let out = upsilon(&["mirror", "examples/t25.json"]);
    assert_eq!(out.status.code(), Some(0));
    let (name, complex) = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(name, "-t25");
    let eval = upsilon(&["tau", "examples/t25.json"]);
    assert_eq!(stdout(&eval).trim(), "2");
    assert_eq!(upsilon_core::upsilon::tau(&complex).unwrap(), -2);
}

#[test]
fn examples_dir_overrides_bundled_library() {
    let dir = scratch_dir("envdir");
    // A file named unknot.json that actually holds the trefoil complex: if
    // the override directory wins, upsilon(1) is -1 rather than 0.
    let trefoil = upsilon(&["examples", "t23"]);
    fs::write(dir.join("unknot.json"), stdout(&trefoil)).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .args(["eval", "unknot.json", "--t", "1"])
        .env("UPSILON_EXAMPLES_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "-1");

    // Without the override the bundled unknot answers.
    let out = upsilon(&["eval", "unknot.json", "--t", "1"]);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn literal_path_wins_over_fallbacks() {
    let dir = scratch_dir("literal");
    let path = dir.join("t37.json");
    let t23 = upsilon(&["examples", "t23"]);
    fs::write(&path, stdout(&t23)).unwrap();
    let out = upsilon(&["tau", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn check_additivity_through_binary() {
    let out = upsilon(&["check-additivity", "examples/t23.json", "examples/t37.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("additivity holds"));
}

#[test]
fn crossing_check_exit_codes() {
    let ok = upsilon(&["crossing-check", "examples/unknot.json", "examples/t23.json"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = upsilon(&["crossing-check", "examples/t23.json", "examples/unknot.json"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("violated"));
}

#[test]
fn alt_check_rejects_t_zero() {
    let out = upsilon(&["alt-check", "examples/t23.json", "--t", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn alt_check_with_samples() {
    let out = upsilon(&["alt-check", "examples/t23_sum_t23.json", "--t", "1/2", "--samples", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn staircase_rejects_odd_step_lists() {
    let out = upsilon(&["staircase", "--steps", "1,2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("odd length"));
}

#[test]
fn staircase_emits_t25() {
    let out = upsilon(&["staircase", "--steps", "1,1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let (name, complex) = parse_complex(&stdout(&out)).unwrap();
    assert_eq!(name, "staircase[1,1,1,1]");
    assert_eq!(upsilon_core::upsilon::tau(&complex).unwrap(), 2);
}

#[test]
fn eval_rejects_out_of_range_parameter() {
    let out = upsilon(&["eval", "examples/t23.json", "--t", "7/3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = upsilon(&["eval", "examples/t23.json", "--t", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn examples_listing_and_lookup() {
    let list = upsilon(&["examples"]);
    let text = stdout(&list);
    for name in ["unknot", "t23", "t25", "t37", "t23_sum_t23"] {
        assert!(text.lines().any(|l| l == name));
    }
    let doc = upsilon(&["examples", "t37"]);
    let (name, complex) = parse_complex(&stdout(&doc)).unwrap();
    assert_eq!(name, "t37");
    assert_eq!(complex.generators().len(), 9);
    let missing = upsilon(&["examples", "t99"]);
    assert_eq!(missing.status.code(), Some(2));
}
