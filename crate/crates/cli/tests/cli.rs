use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

const PLATE: &str = r#"{"bodies": [{"type": "perfect_plate"}],
  "atoms": [{"position": [0, 0, 1], "alpha": {"model": "static", "value": 1}},
            {"position": [2.5, 0, 1], "alpha": {"model": "static", "value": 1}}]}"#;

const MAGNETO: &str = r#"{"bodies": [{"type": "half_space",
    "epsilon": {"model": "resonance", "value": 4, "omega": 1},
    "mu": {"model": "resonance", "value": 2, "omega": 1}}],
  "atoms": [{"position": [0, 0, 0.001], "alpha": {"model": "resonance", "value": 1, "omega": 1}}],
  "length_unit_si": 1e-6}"#;

fn scene(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Outcome {
    let mut argv = vec!["dispersia"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = dispersia::run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn data_lines(csv: &str) -> Vec<&str> {
    csv.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn cp_json_reports_the_plate_potential() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, "plate.json", PLATE);
    let o = run(&[
        "cp",
        "--scene",
        p(&s),
        "--regime",
        "retarded",
        "--format",
        "json",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let doc: Value = serde_json::from_str(&o.stdout).unwrap();
    for key in ["inputs", "result", "error_estimate", "units"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    let u = doc["result"].as_f64().unwrap();
    let oracle = -3.0 / (8.0 * std::f64::consts::PI);
    assert!((u / oracle - 1.0).abs() < 1e-9);
    assert_eq!(doc["inputs"]["command"], "cp");
    assert!(doc["inputs"]["arguments"]["scene_contents"].is_object());
}

#[test]
fn csv_has_a_single_commented_header() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, "m.json", MAGNETO);
    let o = run(&[
        "cp",
        "--scene",
        p(&s),
        "--min",
        "1e-4",
        "--max",
        "1e-3",
        "--points",
        "5",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert!(lines[0].starts_with("# "));
    assert!(lines[0].contains("1 result unit ="), "{}", lines[0]);
    assert_eq!(o.stdout.matches('#').count(), 1);
    assert_eq!(data_lines(&o.stdout).len(), 5);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, "m.json", MAGNETO);
    let args = [
        "cp",
        "--scene",
        p(&s),
        "--min",
        "1e-5",
        "--max",
        "1e-2",
        "--points",
        "9",
    ];
    let first = run(&args);
    assert_eq!(first.code, 0);
    assert_eq!(first.stdout, run(&args).stdout);
}

#[test]
fn invalid_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = scene(&dir, "bad.json", r#"{"bodies": [{"type": "cylinder"}]}"#);
    let inside = scene(
        &dir,
        "inside.json",
        r#"{"bodies": [{"type": "perfect_plate"}],
            "atoms": [{"position": [0, 0, -1], "alpha": {"model": "static", "value": 1}}]}"#,
    );
    let cases: [&[&str]; 4] = [
        &["cp", "--scene", p(&bad)],
        &["cp", "--scene", p(&inside)],
        &["cp", "--scene", "/nonexistent/scene.json"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.code, 2, "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn non_convergence_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, "m.json", MAGNETO);
    let o = run(&[
        "cp",
        "--scene",
        p(&s),
        "--rel-tol",
        "1e-15",
        "--max-levels",
        "4",
    ]);
    assert_eq!(o.code, 3, "{}", o.stderr);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("non-convergence"));
}

#[test]
fn out_writes_the_file_and_nothing_else() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, "plate.json", PLATE);
    let target = dir.path().join("vdw.json");
    let o = run(&[
        "vdw",
        "--scene",
        p(&s),
        "--regime",
        "retarded",
        "--out",
        p(&target),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    let r = &doc["result"];
    let (total, free, body) = (
        r["total"].as_f64().unwrap(),
        r["free_space"].as_f64().unwrap(),
        r["body_induced"].as_f64().unwrap(),
    );
    assert_eq!(total, free + body);
}

#[test]
fn map2d_covers_the_default_grid() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("map.csv");
    let o = run(&["map2d", "--zB", "1.0", "--out", p(&target)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let text = std::fs::read_to_string(&target).unwrap();
    let rows = data_lines(&text);
    assert_eq!(rows.len(), 161 * 80);
    let excluded = rows.iter().filter(|r| r.ends_with(',')).count();
    let inside = (0..80)
        .flat_map(|j| (0..161).map(move |i| (-4.0 + 0.05 * i as f64, 0.05 * (j + 1) as f64)))
        .filter(|(x, z)| x.hypot(z - 1.0) < 0.15 - 1e-9)
        .count();
    assert!(inside > 0);
    assert_eq!(excluded, inside);
}

#[test]
fn verify_scaling_lists_twelve_passing_checks() {
    let o = run(&["verify-scaling", "--all"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let rows = data_lines(&o.stdout);
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.contains(",true,")), "{}", o.stdout);
}

#[test]
fn coefficients_and_pressure_run() {
    let dir = TempDir::new().unwrap();
    let s = scene(&dir, "m.json", MAGNETO);
    let o = run(&["coeffs", "--scene", p(&s), "--format", "json"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let doc: Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(doc["result"]["c3"].as_f64().unwrap() > 0.0);
    let o = run(&[
        "pressure",
        "--scene",
        p(&s),
        "--min",
        "0.1",
        "--max",
        "10",
        "--points",
        "4",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(data_lines(&o.stdout).len(), 4);
}

#[test]
fn binary_honours_the_thread_variable() {
    let bin = env!("CARGO_BIN_EXE_dispersia");
    let args = ["scalefn", "--family", "sphere", "--points", "9"];
    let one = Command::new(bin)
        .args(args)
        .env("DISPERSIA_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(bin)
        .args(args)
        .env("DISPERSIA_THREADS", "4")
        .output()
        .unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    let bad = Command::new(bin)
        .args(args)
        .env("DISPERSIA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}
