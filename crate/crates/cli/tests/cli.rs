use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn minda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minda"))
        .args(args)
        .env_remove("MINDA_SERIES_ORDER")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, String) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = minda(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).unwrap(), text)
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

const COMMANDS: &[&[&str]] = &[
    &["catalog"],
    &["catalog", "--id", "booth"],
    &["radius", "--class", "sine", "--kind", "majorize-starlike"],
    &["radius", "--class", "janowski", "--D", "1", "--E", "-1", "--kind", "majorize-convex"],
    &["radius", "--class", "booth", "--alpha", "0.5", "--kind", "booth"],
    &["radius", "--class", "exp", "--kind", "hallenbeck"],
    &["radius", "--class", "exp", "--kind", "sqrt-variant"],
    &[
        "radius", "--class", "order-alpha", "--alpha", "0.2", "--kind", "product-mbeta",
        "--class2", "order-alpha", "--param2", "alpha=0.3", "--mbeta", "1.5",
    ],
    &["radius", "--class", "order-alpha", "--alpha", "0.2", "--kind", "product-order", "--gamma", "0.1"],
    &["bohr", "--class", "cardioid"],
    &["bohr", "--class", "janowski", "--D", "1", "--E", "-1"],
    &["distort", "--class", "cardioid", "--table1"],
    &["distort", "--class", "exp", "--r", "0.3,0.6"],
    &["curve", "--class", "cardioid", "--object", "psi-boundary", "--n-points", "64"],
    &["curve", "--class", "order-alpha", "--alpha", "0", "--object", "f0-image", "--n-points", "64"],
    &["verify", "--probe", "sharpness", "--class", "janowski", "--D", "1", "--E", "-1"],
    &["verify", "--probe", "bohr-coeff", "--class", "cardioid", "--r", "0.3333"],
    &["verify", "--probe", "bulboaca", "--class", "janowski", "--D", "1", "--E", "-1", "--h", "0,3"],
    &["verify", "--probe", "subordination", "--g", "f0(z/2)", "--class", "order-alpha", "--alpha", "0"],
];

#[test]
fn every_command_validates_against_the_schema() {
    let validator = schema();
    for args in COMMANDS {
        let (report, _) = json(args);
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(report["command"], args[0]);
        assert!(report["timing_ms"].is_null());
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in COMMANDS {
        let (_, a) = json(args);
        let (_, b) = json(args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn reports_round_trip() {
    for args in COMMANDS.iter().take(6) {
        let (value, text) = json(args);
        let again: Value = serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, again);
        assert!(text.contains("\"schema\": \"minda-report/1\""));
    }
}

#[test]
fn timing_is_opt_in() {
    let (report, _) = json(&["catalog", "--timing"]);
    assert!(report["timing_ms"].as_f64().unwrap() >= 0.0);
    assert!(schema().is_valid(&report));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| minda(args).status.code().unwrap();
    assert_eq!(code(&["catalog"]), 0);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["radius", "--class", "nope", "--kind", "majorize-starlike"]), 2);
    assert_eq!(code(&["radius", "--class", "janowski", "--D", "0.2", "--E", "0.5", "--kind", "majorize-starlike"]), 2);
    assert_eq!(code(&["radius", "--class", "sine", "--alpha", "0.3", "--kind", "majorize-starlike"]), 2);
    assert_eq!(code(&["radius", "--class", "sine", "--kind", "hallenbeck"]), 2);
    assert_eq!(code(&["curve", "--class", "cardioid", "--object", "psi-boundary", "--r", "0", "--n-points", "64"]), 2);
    assert_eq!(code(&["curve", "--class", "cardioid", "--object", "psi-boundary", "--n-points", "16"]), 2);
    assert_eq!(
        code(&["curve", "--class", "cardioid", "--object", "psi-boundary", "--out", "/nonexistent-dir/x.csv"]),
        4
    );
    // A probe that comes back false still exits 0.
    assert_eq!(
        code(&["verify", "--probe", "subordination", "--g", "1.01*f0(z)", "--r", "0.99", "--class", "order-alpha", "--alpha", "0"]),
        0
    );
}

#[test]
fn solver_failure_exits_three() {
    // (b(1+z))^{1/a} with b != 1 is admissible in the catalog but has
    // ψ(0) != 1, so synthesis of f₀ fails.
    let out = minda(&["bohr", "--class", "ab-power", "--a", "2", "--b", "0.5"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn series_order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_minda"))
        .args(["bohr", "--class", "cardioid", "--json"])
        .env("MINDA_SERIES_ORDER", "128")
        .output()
        .unwrap();
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["inputs"]["order"], 128);
    let bad = Command::new(env!("CARGO_BIN_EXE_minda"))
        .args(["bohr", "--class", "cardioid"])
        .env("MINDA_SERIES_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn curve_files() {
    let dir = std::env::temp_dir().join(format!("minda-curve-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("crescent.csv");
    let svg = dir.join("crescent.svg");
    let out = minda(&[
        "curve", "--class", "crescent", "--object", "psi-boundary", "--r", "1", "--n-points", "256",
        "--out", csv.to_str().unwrap(), "--svg", svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,x,y"));
    let rows: Vec<(f64, f64, f64)> = lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|s| s.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect();
    assert_eq!(rows.len(), 256);
    // The leftmost point of the crescent is ψ(-1) = √2 - 1.
    let (theta, min) = rows
        .iter()
        .map(|(t, x, y)| (*t, x.hypot(*y)))
        .fold((0.0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
    assert!((min - (2f64.sqrt() - 1.0)).abs() < 1e-12);
    assert!((theta - std::f64::consts::PI).abs() < 1e-12);
    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<svg") && svg_text.contains("<polyline"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cardioid_boundary_minimum() {
    let (report, _) = json(&["curve", "--class", "cardioid", "--object", "psi-boundary", "--r", "1"]);
    let m = &report["results"]["min_modulus"];
    assert!((m["value"].as_f64().unwrap() - 0.372412).abs() < 5e-6);
    assert!((m["theta_star"].as_f64().unwrap() - 1.88438).abs() < 5e-5);
}

#[test]
fn catalog_listing() {
    let (report, _) = json(&["catalog"]);
    let entries = report["results"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 15);
    assert!(entries.iter().any(|e| e["id"] == "sine"));
    let (minus, _) = json(&["catalog", "--id", "sqrt_minus"]);
    assert_eq!(minus["results"]["entries"][0]["orientation"], "negative");
    let (booth, _) = json(&["catalog", "--id", "booth"]);
    let domain = &booth["results"]["entries"][0]["domain_radius"];
    assert!(domain["formula"].as_str().unwrap().contains("alpha r^2 + r - 1"));
    assert!((domain["value"].as_f64().unwrap() - (3f64.sqrt() - 1.0)).abs() < 1e-15);
}

#[test]
fn human_output_uses_twelve_digits() {
    let out = minda(&["radius", "--class", "janowski", "--D", "1", "--E", "-1", "--kind", "majorize-starlike"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("root        0.267949192431"), "{text}");
}
