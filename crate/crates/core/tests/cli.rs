//! End-to-end checks of the command-line surface: flag grammar, document
//! shape, exit-status contract, and file outputs.

use std::process::Command;

use serde_json::Value;

const EQUILATERAL: &str = "0,0 1,0 0.5,0.86602540378443865";

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_aurea"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn construct_emits_document_and_passes() {
    let (code, stdout, _) = run(&["construct", "1", "--triangle", EQUILATERAL]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["kind"], "construction");
    assert_eq!(doc["input"]["construction"], 1);
    let ratio = doc["report"]["ratio_value"].as_f64().unwrap();
    assert!((ratio - 1.6180339887498949).abs() < 1e-10);
    let deviation = doc["report"]["deviation"].as_f64().unwrap();
    assert!(deviation <= 1e-12, "deviation {deviation}");
}

#[test]
fn construct_json_flag_writes_same_document() {
    let path = "/tmp/aurea-cli-doc.json";
    let (code, stdout, _) = run(&["construct", "3", "--triangle", EQUILATERAL, "--json", path]);
    assert_eq!(code, 0);
    let file = std::fs::read_to_string(path).unwrap();
    assert_eq!(stdout.trim_end(), file.trim_end());
}

#[test]
fn construct_reads_input_file() {
    let path = "/tmp/aurea-cli-triangle.txt";
    std::fs::write(path, "0.4,2.1 0,0 3,0.2\n").unwrap();
    let (code, stdout, _) = run(&["construct", "2", "--input", path]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["report"]["ratio_name"], "RS/RQ");
}

#[test]
fn construct_tol_override_controls_exit() {
    // an impossible tolerance turns the same run into a check failure
    let (code, stdout, _) = run(&["construct", "1", "--triangle", EQUILATERAL, "--tol", "1e-18"]);
    assert_eq!(code, 1);
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["input"]["check_tolerance"].as_f64().unwrap(), 1e-18);
}

#[test]
fn usage_errors_exit_two() {
    // no triangle source
    let (code, _, _) = run(&["construct", "1"]);
    assert_eq!(code, 2);
    // both sources
    let (code, _, _) = run(&[
        "construct",
        "1",
        "--triangle",
        EQUILATERAL,
        "--input",
        "/tmp/whatever",
    ]);
    assert_eq!(code, 2);
    // out-of-range construction id
    let (code, _, _) = run(&["construct", "9", "--triangle", EQUILATERAL]);
    assert_eq!(code, 2);
    // suite without seed/count
    let (code, _, _) = run(&["suite"]);
    assert_eq!(code, 2);
}

#[test]
fn geometry_errors_are_machine_readable() {
    let (code, stdout, _) = run(&["construct", "1", "--triangle", "0,0 1,0 2,0"]);
    assert_eq!(code, 2);
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "DegenerateTriangle");
    assert!(doc["error"]["message"].as_str().unwrap().contains("degenerate"));
}

#[test]
fn suite_selects_checks_and_reports() {
    let (code, stdout, _) = run(&[
        "suite",
        "--seed",
        "7",
        "--count",
        "40",
        "--checks",
        "lemma1,ptolemy",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["kind"], "suite");
    let checks = doc["summary"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert_eq!(checks[0]["name"], "lemma1");
    assert_eq!(checks[1]["name"], "ptolemy");
    assert_eq!(doc["summary"]["pass"], true);
}

#[test]
fn suite_rejects_unknown_check() {
    let (code, _, stderr) = run(&["suite", "--seed", "7", "--count", "10", "--checks", "lemma9"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown check"));
}

#[test]
fn verify_each_lemma() {
    for lemma in ["1", "2", "3"] {
        let (code, stdout, _) = run(&["verify", "--lemma", lemma, "--count", "50"]);
        assert_eq!(code, 0, "lemma {lemma}");
        let doc: Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(doc["input"]["lemma"].as_str(), None); // numeric field
        assert_eq!(doc["input"]["lemma"].as_u64().unwrap(), lemma.parse::<u64>().unwrap());
        assert_eq!(doc["summary"]["pass"], true);
    }
}

#[test]
fn render_produces_labeled_svg() {
    let path = "/tmp/aurea-cli-fig.svg";
    let (code, _, _) = run(&["render", "3", "--triangle", "0.4,2.1 0,0 3,0.2", "--out", path]);
    assert_eq!(code, 0);
    let svg = std::fs::read_to_string(path).unwrap();
    assert!(svg.starts_with("<?xml"));
    for label in ["N", "D", "E", "F", "S", "T", "G", "L"] {
        assert!(svg.contains(&format!(">{label}</text>")), "missing {label}");
    }
    assert!(svg.contains("FE/EG"));
}

#[test]
fn negative_coordinates_accepted_inline() {
    let (code, stdout, _) = run(&["construct", "4", "--triangle", "-1,-0.5 2,-0.25 0.5,1.75"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).unwrap();
    let deviation = doc["report"]["deviation"].as_f64().unwrap();
    assert!(deviation <= 1e-9);
}
