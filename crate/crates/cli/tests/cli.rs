//! End-to-end tests of the binary: exit codes, export/verify round trips,
//! report formats and determinism.

use std::path::Path;
use std::process::{Command, Output};

use genstruct::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_genstruct"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn catalog_all_passes() {
    let out = run(&["catalog", "--all"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["g1", "g2", "g3", "g4", "g5", "ellipse"] {
        assert!(text.contains(&format!("catalog entry {name}")));
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn catalog_unknown_name_is_usage_error() {
    let out = run(&["catalog", "g7"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn catalog_reports_nijenhuis_pair_count() {
    let out = run(&["catalog", "g2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("66 basis pairs"), "{text}");
}

#[test]
fn catalog_curve_samples_flag() {
    let out = run(&["catalog", "ellipse", "--curve-samples", "0,1,1/2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("s = 1/2"));
    assert!(!text.contains("s = 7/5"));
}

#[test]
fn catalog_negative_curve_samples() {
    let out = run(&["catalog", "ellipse", "--curve-samples", "-3,-7/5"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("s = -7/5"));
}

#[test]
fn export_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["export", "g5"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run_in(
        dir.path(),
        &[
            "verify",
            "--algebra",
            "g5.algebra.json",
            "--metric",
            "g5.metric.json",
            "--structure",
            "g5.structure.json",
        ],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("nijenhuis tensor vanishes"));
}

#[test]
fn export_g1_uses_basis_presentation() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run_in(dir.path(), &["export", "g1"])), 0);
    let metric = std::fs::read_to_string(dir.path().join("g1.metric.json")).unwrap();
    assert!(metric.contains("gram_in_basis"));
    let out = run_in(
        dir.path(),
        &[
            "verify",
            "--algebra",
            "g1.algebra.json",
            "--metric",
            "g1.metric.json",
            "--structure",
            "g1.structure.json",
        ],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn tampered_structure_fails_with_named_axiom() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run_in(dir.path(), &["export", "g5"])), 0);
    // flip B_{6,5} from 1 to 2: S^2 = -id breaks
    let path = dir.path().join("g5.structure.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let tampered = text.replace("\"6,5\": \"1\"", "\"6,5\": \"2\"");
    assert_ne!(text, tampered, "tamper target not found in {text}");
    std::fs::write(&path, tampered).unwrap();
    let out = run_in(
        dir.path(),
        &[
            "verify",
            "--algebra",
            "g5.algebra.json",
            "--metric",
            "g5.metric.json",
            "--structure",
            "g5.structure.json",
        ],
    );
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
    let textout = String::from_utf8_lossy(&out.stdout);
    assert!(textout.contains("FAIL  S^2 = lambda id"), "{textout}");
}

#[test]
fn tampered_matrix_structure_fails_checks() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run_in(dir.path(), &["export", "ellipse"])), 0);
    let verify_args = [
        "verify",
        "--algebra",
        "ellipse.algebra.json",
        "--metric",
        "ellipse.metric.json",
        "--structure",
        "ellipse.structure.json",
    ];
    // pristine export verifies
    assert_eq!(code(&run_in(dir.path(), &verify_args)), 0);
    // break one entry of the explicit S matrix: axioms fail -> exit 1
    let path = dir.path().join("ellipse.structure.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let pos = text.find("\"-1\"").expect("a -1 entry");
    let tampered = format!("{}\"-2\"{}", &text[..pos], &text[pos + 4..]);
    std::fs::write(&path, tampered).unwrap();
    let out = run_in(dir.path(), &verify_args);
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
    let textout = String::from_utf8_lossy(&out.stdout);
    assert!(textout.contains("FAIL"));
}

#[test]
fn truncated_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run_in(dir.path(), &["export", "g3"])), 0);
    let path = dir.path().join("g3.algebra.json");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    let out = run_in(
        dir.path(),
        &[
            "verify",
            "--algebra",
            "g3.algebra.json",
            "--metric",
            "g3.metric.json",
            "--structure",
            "g3.structure.json",
        ],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn interpolate_reports_eigenspace_dims() {
    for s in ["0", "1/2", "7/5"] {
        let out = run(&["interpolate", "ellipse", "--epsilon", "1", "--s", s]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("dimension 4"));
    }
    // s = 0 must reproduce the block-diagonal extremal exactly
    let out = run(&["interpolate", "ellipse", "--epsilon", "-1", "--s", "0"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[1, 0, 0, 0, 0, 0, 0, 0]"));
}

#[test]
fn interpolate_without_curve_is_usage_error() {
    let out = run(&["interpolate", "g1", "--epsilon", "1", "--s", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_report_round_trips_and_is_deterministic() {
    let out1 = run(&["catalog", "g4", "--report", "json", "--seed", "9"]);
    let out2 = run(&["catalog", "g4", "--report", "json", "--seed", "9"]);
    assert_eq!(code(&out1), 0);
    assert_eq!(
        out1.stdout, out2.stdout,
        "byte-identical output for identical inputs"
    );
    let reports: Vec<Report> = serde_json::from_slice(&out1.stdout).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].all_pass());
    let reserialized = serde_json::to_string_pretty(&reports).unwrap();
    let reparsed: Vec<Report> = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(reparsed, reports);
}

#[test]
fn unknown_flag_rejected() {
    let out = run(&["catalog", "--frobnicate"]);
    assert_eq!(code(&out), 2);
}
