//! End-to-end checks of the binary: output bytes, exit codes, stream
//! separation. Every expectation here is part of the CLI contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riggedpaths"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_riggedpaths"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn convert_word_to_rc_matches_contract() {
    let output = run(&["convert", "--from", "word", "--to", "rc", "--level", "2", "0011"]);
    assert_eq!(
        stdout_of(&output).trim(),
        r#"{"size":4,"level":2,"rows":[{"length":2,"rigging":0}]}"#
    );
}

#[test]
fn convert_word_to_tableau_matches_contract() {
    let output = run(&["convert", "--from", "word", "--to", "tableau", "0101"]);
    assert_eq!(stdout_of(&output).trim(), "[[1,3],[2,4]]");
}

#[test]
fn convert_empty_rc_to_word_is_the_empty_string() {
    let output = run_with_stdin(
        &["convert", "--from", "rc", "--to", "word"],
        r#"{"size":0,"level":3,"rows":[]}"#,
    );
    assert_eq!(stdout_of(&output).trim(), "\"\"");
}

#[test]
fn conversions_round_trip_at_the_byte_level() {
    let rc = stdout_of(&run(&[
        "convert", "--from", "word", "--to", "rc", "--level", "3", "001011",
    ]));
    let back = run_with_stdin(&["convert", "--from", "rc", "--to", "word"], rc.trim());
    assert_eq!(stdout_of(&back).trim(), "\"001011\"");

    let tableau = stdout_of(&run(&["convert", "--from", "word", "--to", "tableau", "001011"]));
    let back = run_with_stdin(&["convert", "--from", "tableau", "--to", "word"], tableau.trim());
    assert_eq!(stdout_of(&back).trim(), "\"001011\"");
}

#[test]
fn stats_records_are_exact() {
    let word = run(&["stats", "word", "001011"]);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&word).trim()).unwrap();
    assert_eq!(value, serde_json::json!({ "H": 9, "E": 3 }));

    let tableau = run(&["stats", "tableau", "[[1,2,4,8],[3,6,9],[5,7]]"]);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&tableau).trim()).unwrap();
    assert_eq!(value, serde_json::json!({ "p": 16, "charge": 20 }));

    let rc = run(&["stats", "rc", r#"{"size":4,"level":2,"rows":[{"length":2,"rigging":0}]}"#]);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&rc).trim()).unwrap();
    assert_eq!(
        value,
        serde_json::json!({ "momentum": 2, "vacancies": [2, 0], "takahashi": ["0"] })
    );
}

#[test]
fn enumerate_is_deterministic_and_counts_agree() {
    let paths = stdout_of(&run(&["enumerate", "paths", "--level", "2", "--length", "6"]));
    let lines: Vec<&str> = paths.lines().collect();
    assert_eq!(lines, ["\"001011\"", "\"001101\"", "\"010011\"", "\"010101\""]);

    let count = stdout_of(&run(&[
        "enumerate", "paths", "--level", "2", "--length", "6", "--format", "count",
    ]));
    assert_eq!(count.trim(), "4");
    let rcs = stdout_of(&run(&[
        "enumerate", "rcs", "--level", "2", "--length", "6", "--format", "count",
    ]));
    assert_eq!(rcs.trim(), "4");
    let tableaux = stdout_of(&run(&[
        "enumerate", "tableaux", "--level", "2", "--length", "6", "--format", "count",
    ]));
    assert_eq!(tableaux.trim(), "4");
}

#[test]
fn polynomials_print_coefficient_arrays() {
    let bosonic = run(&["poly", "bosonic", "--level", "2", "--length", "4"]);
    assert_eq!(stdout_of(&bosonic).trim(), "[1,0,1]");
    let fermionic = run(&["poly", "fermionic", "--level", "2", "--length", "4"]);
    assert_eq!(stdout_of(&fermionic).trim(), "[1,0,1]");
    let ising = run(&["poly", "bosonic", "--level", "1", "--length", "10"]);
    assert_eq!(stdout_of(&ising).trim(), "[1]");
}

#[test]
fn exit_codes_separate_parse_and_domain_failures() {
    // Alphabet violation: the string does not parse as a word.
    let bad_parse = run(&["stats", "word", "01a1"]);
    assert_eq!(bad_parse.status.code(), Some(2));

    // Parses fine, fails the lattice invariant.
    let bad_domain = run(&["convert", "--from", "word", "--to", "tableau", "0110"]);
    assert_eq!(bad_domain.status.code(), Some(3));

    // Valid JSON, inadmissible rigging.
    let bad_rc = run(&[
        "stats", "rc", r#"{"size":2,"level":1,"rows":[{"length":1,"rigging":5}]}"#,
    ]);
    assert_eq!(bad_rc.status.code(), Some(3));

    // Truncated JSON.
    let bad_json = run(&["stats", "tableau", "[[1,2"]);
    assert_eq!(bad_json.status.code(), Some(2));

    // Missing --level on a word -> rc conversion.
    let missing_level = run(&["convert", "--from", "word", "--to", "rc", "0011"]);
    assert_eq!(missing_level.status.code(), Some(2));
}

#[test]
fn trace_emits_one_step_per_letter_then_the_result() {
    let output = run(&[
        "convert", "--from", "word", "--to", "rc", "--level", "2", "--trace", "0011",
    ]);
    let text = stdout_of(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["position"], 1);
    assert_eq!(first["letter"], 0);
    // Riggings of the two insertions: the fresh string is singular each time.
    let third: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
    assert_eq!(third["rigging"], 1);
    let fourth: serde_json::Value = serde_json::from_str(lines[3]).unwrap();
    assert_eq!(fourth["rigging"], 0);
    assert_eq!(
        lines[4],
        r#"{"size":4,"level":2,"rows":[{"length":2,"rigging":0}]}"#
    );
}

#[test]
fn verify_all_passes_and_keeps_stdout_machine_readable() {
    let output = run(&[
        "verify", "--suite", "all", "--level", "2", "--max-length", "8", "--verbose",
    ]);
    let text = stdout_of(&output);
    for line in text.lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("stdout is JSON lines");
        let pass = value
            .get("pass")
            .or_else(|| value.get("equal"))
            .and_then(|v| v.as_bool())
            .expect("every line reports a verdict");
        assert!(pass);
    }
    // Human commentary lands on stderr, never stdout.
    assert!(!String::from_utf8_lossy(&output.stderr).is_empty());
}
