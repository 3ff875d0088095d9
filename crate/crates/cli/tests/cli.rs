use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cusp-iso"))
        .args(args)
        .env_remove("CUSP_ISO_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn silver() -> f64 {
    (1.0 + 2f64.sqrt()).ln()
}

#[test]
fn bound_reports_regular_cusp() {
    let out = run(&["bound", "--genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cusp_sides"], 12);
    assert!((v["bound"].as_f64().unwrap() - 12.0 * silver()).abs() < 1e-14);
    assert!((v["side_length"].as_f64().unwrap() - 2.0 * silver()).abs() < 1e-14);
}

#[test]
fn reals_print_seventeen_digits() {
    let text = String::from_utf8(run(&["bound", "--genus", "1"]).stdout).unwrap();
    assert!(text.contains("\"bound\": 3.5254943480781717e0"), "{text}");
}

#[test]
fn genus_zero_is_usage_error() {
    assert_eq!(run(&["bound", "--genus", "0"]).status.code(), Some(2));
}

#[test]
fn csv_and_human_outputs() {
    let csv = String::from_utf8(run(&["bound", "--genus", "2", "--output", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("key,value\n"));
    assert!(csv.contains("cusp_sides,12\n"));
    let human =
        String::from_utf8(run(&["bound", "--genus", "2", "--output", "human"]).stdout).unwrap();
    assert!(
        human
            .lines()
            .any(|l| l.starts_with("bound") && l.ends_with("10.576483")),
        "{human}"
    );
}

#[test]
fn torus_fixture() {
    let out = run(&["fillpair", &fixture("torus_single_crossing.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cusp_sides"], 4);
    assert_eq!(v["genus"]["g"], 1);
    assert_eq!(v["passed"], true);
}

#[test]
fn corrupted_map_names_the_dart() {
    let out = run(&["fillpair", &fixture("corrupted_involution.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("dart 0"), "{err}");
}

#[test]
fn non_filling_pair_fails() {
    let out = run(&["fillpair", &fixture("sphere_two_crossings.json")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_file_is_input_error() {
    assert_eq!(
        run(&["fillpair", "/nonexistent/map.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn perimeter_gap_suite_reports_h_at_five() {
    let out = run(&["verify", "--suite", "final_lemma"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let h5 = v[0]["reports"][0]["h_at_5"].as_f64().unwrap();
    let f5 = 10.0 * (2f64.sqrt() * (std::f64::consts::PI / 5.0).cos()).acosh();
    assert!((h5 - (f5 - 2.0 * silver())).abs() < 1e-12);
}

#[test]
fn area_search_with_automatic_perimeter() {
    let out = run(&[
        "verify",
        "--suite",
        "theorem12",
        "--p",
        "4",
        "--L",
        "auto",
        "--restarts",
        "3",
        "--samples",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let reference = v[0]["reports"][0]["reference_value"].as_f64().unwrap();
    assert!((reference - 2.0 * std::f64::consts::PI).abs() < 1e-12);
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "--seed",
        "7",
        "verify",
        "--suite",
        "all",
        "--restarts",
        "4",
        "--samples",
        "20",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)[0]["seed"], 7);
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_cusp-iso"))
        .args(["verify", "--suite", "lemma24"])
        .env("CUSP_ISO_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(json(&out)[0]["seed"], 99);
}

#[test]
fn tolerance_overrides() {
    assert_eq!(
        run(&[
            "--tolerance-override",
            "bogus=1",
            "verify",
            "--suite",
            "final_lemma"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "--tolerance-override",
            "curvature",
            "verify",
            "--suite",
            "final_lemma"
        ])
        .status
        .code(),
        Some(2)
    );
    let strict = run(&[
        "--tolerance-override",
        "curvature=1e-9",
        "verify",
        "--suite",
        "final_lemma",
    ]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn unknown_suite_is_usage_error() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn cusp_from_document() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"vertices": [[0.0, 1.0], [1.0, 1.0], [2.0, 1.0]], "width": 3.0}}"#
    )
    .unwrap();
    let out = run(&["cusp", "--input", file.path().to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    let sides: Vec<f64> = v["side_lengths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(sides.len(), 3);
    // Horocyclic points at height 1, one unit apart: 2 asinh(1/2).
    assert!((sides[0] - 2.0 * 0.5f64.asinh()).abs() < 1e-12);
}

#[test]
fn regular_cusp_from_angle() {
    let out = run(&[
        "cusp",
        "--p",
        "12",
        "--theta",
        &std::f64::consts::FRAC_PI_2.to_string(),
    ]);
    let v = json(&out);
    assert!((v["l"].as_f64().unwrap() - 2.0 * silver()).abs() < 1e-12);
}

#[test]
fn triangle_from_sides() {
    let out = run(&["triangle", "--sides", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = ((1f64.cosh() * 1f64.cosh() - 1f64.cosh()) / (1f64.sinh() * 1f64.sinh())).acos();
    let v: Value = serde_json::from_str(&text).unwrap();
    let angles = v["angles"].as_array().expect(&text);
    assert!(angles
        .iter()
        .all(|a| (a.as_f64().unwrap() - expected).abs() < 1e-12));
}
