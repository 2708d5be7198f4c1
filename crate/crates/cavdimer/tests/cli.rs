//! The binary end to end: exit codes, output formats, determinism.

use std::process::{Command, Output};

fn cavdimer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cavdimer")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn parse_csv(text: &str) -> Vec<Vec<f64>> {
    text.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect()
}

#[test]
fn csv_header_and_shape() {
    let text = stdout(&cavdimer(&["simulate", "--t-max", "5", "--samples", "11"]));
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,p_atom1,p_atom2,p_cav1,p_cav2,p_field_total,p_mode_m1,p_mode_m2,norm");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 11);
    for r in rows {
        assert_eq!(r.split(',').count(), 9);
        assert!(!r.ends_with(','));
    }
}

#[test]
fn zero_window_gives_two_identical_initial_rows() {
    let rows = parse_csv(&stdout(&cavdimer(&["simulate", "--model", "exact", "--t-max", "0", "--samples", "2"])));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0], rows[1]);
    assert_eq!(rows[0], [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args =
        ["simulate", "--hopping", "100", "--detuning", "100", "--t-max", "12", "--samples", "500", "--format", "json"];
    assert_eq!(cavdimer(&args).stdout, cavdimer(&args).stdout);
    let scan = [
        "scan",
        "--param",
        "hopping",
        "--from",
        "2",
        "--to",
        "12",
        "--points",
        "6",
        "--observable",
        "first-transfer-time",
    ];
    assert_eq!(cavdimer(&scan).stdout, cavdimer(&scan).stdout);
}

#[test]
fn json_output_reproduces_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let args = [
        "simulate",
        "--model",
        "near-resonant",
        "--hopping",
        "100.1",
        "--detuning",
        "100",
        "--init",
        "0.7,0.3",
        "--t-max",
        "20",
        "--samples",
        "300",
        "--format",
        "json",
        "--output",
    ];
    let mut full: Vec<&str> = args.to_vec();
    full.push(first.to_str().unwrap());
    assert!(cavdimer(&full).status.success());
    let again = cavdimer(&["simulate", "--config", first.to_str().unwrap(), "--format", "json"]);
    assert_eq!(stdout(&again).into_bytes(), std::fs::read(&first).unwrap());

    let doc: serde_json::Value = serde_json::from_slice(&std::fs::read(&first).unwrap()).unwrap();
    assert_eq!(doc["config"]["model"], "near-resonant");
    assert_eq!(doc["config"]["init"], "0.7,0.3");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 300);
    assert_eq!(doc["rows"][0].as_array().unwrap().len(), 9);
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let base = ["simulate", "--t-max", "3", "--samples", "7"];
    let csv = parse_csv(&stdout(&cavdimer(&base)));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&cavdimer(&[&base[..], &["--format", "json"]].concat()))).unwrap();
    let rows: Vec<Vec<f64>> = serde_json::from_value(json["rows"].clone()).unwrap();
    assert_eq!(csv, rows);
}

#[test]
fn exit_codes() {
    assert_eq!(cavdimer(&["simulate", "--model", "nope"]).status.code(), Some(2));
    assert_eq!(cavdimer(&["simulate", "--samples", "1"]).status.code(), Some(2));
    assert_eq!(cavdimer(&["simulate", "--init", "atom7"]).status.code(), Some(2));
    assert_eq!(
        cavdimer(&["scan", "--param", "hopping", "--from", "1", "--to", "2", "--observable", "fidelity"]).status.code(),
        Some(2)
    );
    // dispersive model exactly on resonance with a delocalized mode
    let out = cavdimer(&["simulate", "--model", "dispersive", "--hopping", "10", "--detuning", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
    let out = cavdimer(&["simulate", "--model", "resonant", "--hopping", "100", "--detuning", "100", "--init", "cav1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn compare_exact_with_oracle() {
    let out = stdout(&cavdimer(&[
        "compare",
        "--model",
        "exact",
        "--against",
        "oracle",
        "--hopping",
        "37.5",
        "--detuning",
        "-12.25",
        "--omega-f",
        "1234",
        "--init",
        "1.1,2.0",
        "--t-max",
        "100",
        "--samples",
        "2000",
    ]));
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(report["max_dev"].as_f64().unwrap() <= 1e-9, "{report}");
    assert!(report["rms_dev"].as_f64().unwrap() <= report["max_dev"].as_f64().unwrap());
    assert_eq!(report["grid"]["samples"], 2000);
    assert_eq!(report["against"], "oracle");
}

#[test]
fn compare_same_model_is_exactly_zero() {
    let out = stdout(&cavdimer(&["compare", "--model", "dispersive", "--against", "dispersive"]));
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["max_dev"], 0.0);
    assert_eq!(report["rms_dev"], 0.0);
}

#[test]
fn resonant_model_warns_past_its_horizon() {
    let out = cavdimer(&["simulate", "--model", "resonant", "--hopping", "100", "--detuning", "100", "--t-max", "50"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("validity horizon"));
}

#[test]
fn transfer_times_tables() {
    let text = stdout(&cavdimer(&["transfer-times", "--regime", "dispersive", "--n-max", "2"]));
    let taus: Vec<f64> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    for (x, y) in taus.iter().zip([15.70639247162217, 78.53196235811085, 141.35753224459953]) {
        assert!((x - y).abs() < 1e-9);
    }
    let text = stdout(&cavdimer(&[
        "transfer-times",
        "--regime",
        "resonant",
        "--hopping",
        "100",
        "--detuning",
        "100",
        "--n-max",
        "2",
    ]));
    let taus: Vec<f64> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    let pi = std::f64::consts::PI;
    assert_eq!(taus, [pi, 3.0 * pi, 5.0 * pi]);
    let text = stdout(&cavdimer(&["transfer-times", "--n-max", "0", "--format", "json"]));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 1);
    assert_eq!(doc["classification"]["label"], "large-hopping");
    assert!(doc["rows"][0]["phase_ok"].is_boolean());
}

#[test]
fn g_flag_rescales_time() {
    let unit = parse_csv(&stdout(&cavdimer(&["simulate", "--t-max", "10", "--samples", "21"])));
    let doubled = parse_csv(&stdout(&cavdimer(&["simulate", "--g", "2", "--t-max", "10", "--samples", "21"])));
    for (u, d) in unit.iter().zip(&doubled) {
        assert!((u[0] - 2.0 * d[0]).abs() < 1e-12);
        for k in 1..9 {
            assert!((u[k] - d[k]).abs() < 1e-9, "column {k}");
        }
    }
}

#[test]
fn scan_hopping_first_transfer_time_grows_linearly() {
    let text = stdout(&cavdimer(&[
        "scan",
        "--param",
        "hopping",
        "--from",
        "1",
        "--to",
        "20",
        "--points",
        "20",
        "--observable",
        "first-transfer-time",
        "--detuning",
        "0.1",
        "--t-max",
        "60",
        "--samples",
        "6000",
    ]));
    let rows = parse_csv(&text);
    assert!(rows.windows(2).all(|w| w[1][1] > w[0][1]), "{text}");
    // τ₀ ≈ πA/2 once A ≫ g
    for r in rows.iter().filter(|r| r[0] >= 5.0) {
        assert!((r[1] / r[0] - std::f64::consts::FRAC_PI_2).abs() < 0.1, "{r:?}");
    }
}

#[test]
fn scan_detuning_first_transfer_time_grows() {
    let text = stdout(&cavdimer(&[
        "scan",
        "--param",
        "detuning",
        "--from",
        "20",
        "--to",
        "100",
        "--points",
        "5",
        "--observable",
        "first-transfer-time",
        "--hopping",
        "10",
        "--t-max",
        "2500",
        "--samples",
        "100000",
    ]));
    let rows = parse_csv(&text);
    assert!(rows.windows(2).all(|w| w[1][1] > w[0][1]), "{text}");
    for r in &rows {
        let expected = std::f64::consts::PI * (r[0] * r[0] - 100.0) / 20.0;
        assert!((r[1] / expected - 1.0).abs() < 0.05, "{r:?}");
    }
}

#[test]
fn scan_single_point_matches_simulation() {
    let text = stdout(&cavdimer(&["scan", "--param", "hopping", "--from", "10", "--to", "10", "--points", "1"]));
    let rows = parse_csv(&text);
    assert_eq!(rows.len(), 1);
    let sim = parse_csv(&stdout(&cavdimer(&["simulate"])));
    let grid_max = sim.iter().map(|r| r[2]).fold(0.0, f64::max);
    assert!(rows[0][1] >= grid_max && rows[0][1] - grid_max < 1e-4);
}
