//! Drives the installed binary end to end and pins exit codes, output
//! shapes, and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tonality"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn cadences_lists_the_tetradic_groups() {
    let output = run(&["cadences", "--width", "4"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        ["I7,II7", "I7,IV7", "II7,III7", "III7,IV7", "V7", "VII7"]
    );
}

#[test]
fn cadences_lists_the_triadic_groups_by_default() {
    let output = run(&["cadences"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        ["II,III", "II,V", "III,IV", "IV,V", "VII"]
    );
}

#[test]
fn quantum_reports_the_whole_step_dominant_modulation() {
    let output = run(&[
        "quantum",
        "--width",
        "4",
        "--target-distance",
        "2",
        "--modulator",
        "T6.11",
        "--cadence",
        "V",
    ]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("quantum:   1,2,4,5,7,9,11"));
    assert!(text.contains("pivots:    II7,V7,VII7"));
    assert!(text.contains("covered:   true"));
}

#[test]
fn quantum_reports_rigidity_failures_calmly() {
    let output = run(&[
        "quantum",
        "--width",
        "4",
        "--target-distance",
        "4",
        "--modulator",
        "T4",
        "--cadence",
        "V",
    ]);
    assert_eq!(code(&output), 0, "a failed rigidity test is still a result");
    let text = stdout(&output);
    assert!(text.contains("not quantized"));
    assert!(text.contains("trace:     1,3,6,9,11"));
    assert!(text.contains("fixed by:  T0.11"));
}

#[test]
fn catalog_csv_lists_every_quantized_row() {
    let output = run(&["catalog", "--width", "4", "--format", "csv"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("tr,cadence,quantum,modulator,pivots,covered,annotations")
    );
    assert_eq!(lines.count(), 24);
    assert!(text.contains("2,V7,1;2;4;5;7;9;11,T6.11,II7;V7;VII7,true,chaining"));
}

#[test]
fn cover_filter_trims_the_catalog() {
    let output = run(&["catalog", "--width", "4", "--format", "csv", "--require-cover"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output).lines().count(), 21);
    assert!(!stdout(&output).contains("false"));
}

#[test]
fn golden_check_reports_the_rows_beyond_the_reference() {
    let output = run(&["catalog", "--width", "4", "--check-golden"]);
    assert_eq!(code(&output), 1, "the engine finds rows the reference lacks");
    let diagnostics = stderr(&output);
    assert!(diagnostics.contains("catalog has 24 rows, bundled reference has 22"));
    assert!(diagnostics
        .contains("absent from reference: tr=3 cadence=VII7 quantum=0,2,3,5,6,8,9,11 modulator=T3 pivots=II7,VII7 covered=true"));
    assert!(diagnostics
        .contains("absent from reference: tr=9 cadence=VII7 quantum=0,2,3,5,6,8,9,11 modulator=T9 pivots=II7,VII7 covered=true"));
    assert!(!diagnostics.contains("missing from catalog"));
}

#[test]
fn golden_check_rejects_the_triadic_catalog_outright() {
    let output = run(&["catalog", "--check-golden"]);
    assert_eq!(code(&output), 1);
}

#[test]
fn catalog_json_round_trips_byte_identically() {
    let output = run(&["catalog", "--width", "4", "--format", "json"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    let rows = tonality::wire::wires_from_json(&text).expect("parseable");
    assert_eq!(rows.len(), 24);
    assert_eq!(tonality::wire::wires_to_json(&rows), text);
}

#[test]
fn runs_are_deterministic() {
    for args in [
        vec!["catalog", "--width", "4", "--format", "json"],
        vec!["nerve", "--width", "4", "--format", "dot"],
        vec!["cadences", "--width", "4", "--format", "csv"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(stdout(&first), stdout(&second));
        assert_eq!(code(&first), code(&second));
    }
}

#[test]
fn nerve_dot_draws_the_complete_skeleton() {
    let output = run(&["nerve", "--width", "4", "--format", "dot"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("graph nerve {"));
    assert_eq!(text.matches(" -- ").count(), 21);
    assert!(text.contains("\"V7\" -- \"VII7\";"));
}

#[test]
fn nerve_text_reports_the_toroidal_shape() {
    let output = run(&["nerve", "--width", "4"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("f-vector:             7,21,21,7"));
    assert!(text.contains("euler characteristic: 0"));
    assert!(text.contains("complete 1-skeleton:  true"));
}

#[test]
fn bad_input_exits_with_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["cadences", "--scale", "0,2,x"],
        vec!["cadences", "--modulus", "2"],
        vec!["cadences", "--scale", ""],
        vec![
            "quantum",
            "--width",
            "4",
            "--target-distance",
            "2",
            "--modulator",
            "T5.11",
            "--cadence",
            "V",
        ],
        vec![
            "quantum",
            "--target-distance",
            "1",
            "--modulator",
            "Q1",
            "--cadence",
            "V",
        ],
        vec![
            "quantum",
            "--target-distance",
            "1",
            "--modulator",
            "T1",
            "--cadence",
            "XIIX",
        ],
        vec!["cadences", "--format", "dot"],
        vec!["catalog", "--format", "dot"],
        vec!["nerve", "--format", "csv"],
    ];
    for args in cases {
        let output = run(&args);
        assert_eq!(code(&output), 2, "args {args:?}");
        assert!(!stderr(&output).is_empty(), "args {args:?}");
    }
}

#[test]
fn oversized_searches_exit_with_three() {
    let eighteen: String = (0..18).map(|r| r.to_string()).collect::<Vec<_>>().join(",");
    for subcommand in ["cadences", "nerve", "catalog"] {
        let output = run(&[subcommand, "--modulus", "24", "--scale", &eighteen]);
        assert_eq!(code(&output), 3, "subcommand {subcommand}");
        assert!(stderr(&output).contains("capacity"));
    }
}
