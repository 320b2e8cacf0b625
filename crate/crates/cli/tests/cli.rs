//! Behavioural tests for the `oxbar` binary: exit codes, output formats,
//! unit handling, and self-describing configuration blocks.

use std::path::PathBuf;
use std::process::{Command, Output};

fn oxbar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oxbar"))
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
fn evaluate_anchor_value_in_json() {
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "ornoc-ccc",
        "--n",
        "8",
        "--die-area",
        "4",
        "--preset",
        "biberman2011",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"l_total_db\": 5.250000"), "{text}");
    let parsed: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(parsed["result"]["l_total_db"].as_f64().unwrap(), 5.25);
    // resolved configuration is embedded, preset expanded
    assert_eq!(parsed["config"]["tech"]["p_propagation_db_per_cm"], 0.5);
    assert_eq!(parsed["config"]["pitch_cm"].as_f64().unwrap(), 0.25);
}

#[test]
fn pitch_is_given_in_millimetres() {
    let by_pitch = oxbar(&[
        "evaluate",
        "--topology",
        "ornoc-ccc",
        "--n",
        "8",
        "--pitch",
        "2.5",
        "--preset",
        "biberman2011",
    ]);
    assert_eq!(code(&by_pitch), 0);
    let text = stdout(&by_pitch);
    assert!(text.contains("\"pitch_cm\": 0.250000"), "{text}");
    assert!(text.contains("\"l_total_db\": 5.250000"), "{text}");
}

#[test]
fn resources_reports_reduced_count() {
    let out = oxbar(&["resources", "--topology", "lambda-router", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"mr_crossbar_reduced\": 224"));
}

#[test]
fn verify_passes_and_reports_no_mismatches() {
    let out = oxbar(&["verify", "--max-n", "8"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"mismatch_count\": 0"));
}

#[test]
fn presets_lists_the_published_table() {
    let out = oxbar(&["presets", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[1],
        "name,p_crossing_db,p_propagation_db_per_cm,p_drop_db"
    );
    assert_eq!(lines[2], "pan2010,0.050000,1.000000,1.500000");
    assert_eq!(lines[3], "kirman2010,0.120000,1.000000,1.000000");
    assert_eq!(lines[4], "biberman2011,0.050000,0.500000,0.500000");
    assert_eq!(lines[5], "koka2012,0.200000,0.100000,1.500000");
}

#[test]
fn invalid_arguments_exit_one() {
    // unknown flag
    assert_eq!(code(&oxbar(&["evaluate", "--bogus"])), 1);
    // both pitch sources
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "matrix-a",
        "--n",
        "2",
        "--pitch",
        "10",
        "--die-area",
        "4",
        "--preset",
        "pan2010",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("exactly one of"));
    // preset and explicit triple together
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "matrix-a",
        "--n",
        "2",
        "--pitch",
        "10",
        "--preset",
        "pan2010",
        "--p-crossing",
        "0.1",
    ]);
    assert_eq!(code(&out), 1);
    // unknown preset
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "matrix-a",
        "--n",
        "2",
        "--pitch",
        "10",
        "--preset",
        "nope",
    ]);
    assert_eq!(code(&out), 1);
    // unknown implementation
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "matrix-serpentine",
        "--n",
        "2",
        "--pitch",
        "10",
        "--preset",
        "pan2010",
    ]);
    assert_eq!(code(&out), 1);
    // incomplete explicit triple
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "matrix-a",
        "--n",
        "2",
        "--pitch",
        "10",
        "--p-crossing",
        "0.1",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn model_errors_exit_two() {
    // uncalibrated layout-B point in strict mode
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "lambda-router-b",
        "--n",
        "4",
        "--die-area",
        "4",
        "--preset",
        "biberman2011",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no calibration"));
    // odd array side
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "matrix-a",
        "--n",
        "3",
        "--die-area",
        "4",
        "--preset",
        "pan2010",
    ]);
    assert_eq!(code(&out), 2);
    // odd ring port count
    let out = oxbar(&["assign", "--mode", "ccc", "--ports", "5"]);
    assert_eq!(code(&out), 2);
    // out-of-range verify limit
    assert_eq!(code(&oxbar(&["verify", "--max-n", "10"])), 2);
}

#[test]
fn lenient_mode_substitutes_and_flags() {
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "lambda-router-b",
        "--n",
        "4",
        "--die-area",
        "4",
        "--preset",
        "biberman2011",
        "--lenient",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("zero-extra substituted"), "{text}");
}

#[test]
fn assign_csv_shape() {
    let out = oxbar(&["assign", "--mode", "c", "--ports", "4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# {"));
    assert_eq!(lines[1], "src,dst,wavelength,direction,segments");
    // 6 pairs, two arcs each
    assert_eq!(lines.len(), 2 + 12);
    assert!(lines[2].split(',').count() == 5);
}

#[test]
fn sweep_csv_columns_match_contract() {
    let out = oxbar(&[
        "sweep",
        "--axis",
        "pitch",
        "--n",
        "8",
        "--pitch-values",
        "0.125,0.25,0.5,1,2",
        "--topologies",
        "ornoc-ccc,snake-b",
        "--preset",
        "biberman2011",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[1],
        "axis_value,topology,layout,d_max_cm,n_crossing,n_drop,l_waveguide_db,l_crossing_db,l_drop_db,l_total_db"
    );
    // 5 pitches x 2 implementations
    assert_eq!(lines.len(), 2 + 10);
    // axis values are the resolved pitches in cm, ascending
    assert!(lines[2].starts_with("0.012500,"));
    assert!(lines[10].starts_with("0.200000,"));
}

#[test]
fn sweep_all_expands_to_every_implementation() {
    let out = oxbar(&[
        "sweep",
        "--axis",
        "n",
        "--die-area",
        "4",
        "--n-values",
        "8",
        "--topologies",
        "all",
        "--preset",
        "koka2012",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    let lines = stdout(&out).lines().count();
    assert_eq!(lines, 2 + 8);
}

#[test]
fn frontier_csv_has_header_block_and_line_points() {
    let out = oxbar(&[
        "frontier",
        "--a",
        "lambda-router-a",
        "--b",
        "lambda-router-b",
        "--n",
        "8",
        "--pitch",
        "2.5",
        "--p-drop",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].contains("\"slope\": 14.571429"), "{}", lines[0]);
    assert!(lines[0].contains("\"wins_below\": \"lambda-router-a\""));
    assert_eq!(lines[1], "p_crossing,p_propagation");
    // rows outside the 0..2 dB/cm plotting range are clipped
    for row in &lines[2..] {
        let p_propagation: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        assert!((0.0..=2.0).contains(&p_propagation));
    }
    assert!(lines.len() > 10);
}

#[test]
fn degenerate_frontier_is_flagged_not_failed() {
    let out = oxbar(&[
        "frontier", "--a", "snake-a", "--b", "snake-a", "--n", "8", "--pitch", "2.5", "--p-drop",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("\"degenerate\": true"));
    assert!(text.contains("\"slope\": null"));
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("oxbar-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("resources.json");
    let piped = oxbar(&["resources", "--topology", "matrix", "--n", "2"]);
    let filed = oxbar(&[
        "resources",
        "--topology",
        "matrix",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&filed), 0);
    assert!(stdout(&filed).is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, piped.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn config_file_presets_are_usable() {
    let dir = std::env::temp_dir().join(format!("oxbar-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lab.json");
    std::fs::write(
        &path,
        r#"{"presets": {"mylab": {"p_crossing_db": 0.08, "p_propagation_db_per_cm": 0.9, "p_drop_db": 1.2}}}"#,
    )
    .unwrap();
    let out = oxbar(&[
        "evaluate",
        "--topology",
        "ornoc-c",
        "--n",
        "2",
        "--pitch",
        "10",
        "--preset",
        "MyLab",
        "--config",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    // d_max = 3 cm, so 0.9*3 + 1.2 = 3.9 dB
    assert!(text.contains("\"l_total_db\": 3.900000"), "{text}");
    assert!(text.contains("\"name\": \"mylab\""));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_outputs_reparse_and_rematch() {
    // parse -> the parsed numbers agree with the printed six-decimal text
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "evaluate",
            "--topology",
            "snake-b",
            "--n",
            "8",
            "--die-area",
            "4",
            "--preset",
            "koka2012",
        ],
        vec!["resources", "--topology", "ornoc-ccc", "--n", "8"],
        vec!["assign", "--mode", "ccc", "--ports", "6"],
        vec![
            "frontier",
            "--a",
            "snake-b",
            "--b",
            "ornoc-ccc",
            "--n",
            "8",
            "--pitch",
            "2.5",
            "--p-drop",
            "1",
            "--crossing-model",
            "zero-extra",
        ],
        vec!["verify", "--max-n", "4"],
        vec!["presets"],
    ];
    for args in commands {
        let out = oxbar(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        let text = stdout(&out);
        let parsed: serde_json::Value =
            serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(parsed.get("command").is_some(), "{args:?}");
    }
}
