//! End-to-end tests of the command-line interface: JSON schema, exit codes,
//! CSV output, and cross-thread byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entropy-moments"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn moments_json_schema_and_values() {
    let out = run(&["moments", "--m", "2", "--n", "2"]);
    let v = stdout_json(&out);
    for key in ["version", "config", "results", "summary"] {
        assert!(v.get(key).is_some(), "missing top-level key {key}");
    }
    assert_eq!(v["config"]["m"], 2);
    let variance = &v["results"][1];
    assert_eq!(variance["quantity"], "entropy_variance");
    assert_eq!(variance["exact"]["rendered"], "13/36 - 1/30*pi^2");
    let numeric = variance["numeric"].as_f64().unwrap();
    assert!((numeric - 0.03212429774146582).abs() < 1e-15);
    assert_eq!(v["summary"]["all_passed"], true);
}

#[test]
fn moments_zero_variance_row() {
    let out = run(&["moments", "--m", "1", "--n", "7"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"][1]["exact"]["rendered"], "0");
    assert_eq!(v["results"][1]["numeric"].as_f64().unwrap(), 0.0);
}

#[test]
fn moments_csv_row() {
    let out = run(&["moments", "--m", "2", "--n", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "quantity,m,n,exact,numeric");
    let mean = lines.next().unwrap();
    assert!(mean.starts_with("mean_entropy,2,3,\"9/20\",4.5"), "{mean}");
}

#[test]
fn invalid_dims_is_usage_error() {
    let out = run(&["moments", "--m", "5", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["moments", "--m", "2", "--n", "2", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_bound_guard() {
    let out = run(&["verify", "conjecture", "--max-n", "26"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_conjecture_small_sweep() {
    let out = run(&["verify", "conjecture", "--max-n", "5"]);
    let v = stdout_json(&out);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["checks"], 15);
    assert_eq!(v["results"][0]["second_moment_equal"], true);
}

#[test]
fn verify_identities_small_sweep() {
    let out = run(&["verify", "identities", "--max", "5"]);
    let v = stdout_json(&out);
    assert_eq!(v["summary"]["failed"], 0);
    let groups = v["results"].as_array().unwrap();
    assert_eq!(groups.len(), 16);
    for g in groups {
        assert_eq!(g["failures"].as_array().unwrap().len(), 0);
        assert_eq!(
            g["cases"].as_u64().unwrap() as usize,
            g["params"].as_array().unwrap().len()
        );
    }
}

#[test]
fn verify_consolidation_small_sweep() {
    let out = run(&["verify", "consolidation", "--max-n", "7"]);
    let v = stdout_json(&out);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["results"][0]["coefficient_identities_equal"], true);
}

#[test]
fn oracle_symbolic_exact_match() {
    let out = run(&["oracle", "ia", "--m", "3", "--n", "5", "--method", "symbolic"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["exact_equal"], true);
    assert_eq!(v["results"]["deviation_abs"].as_f64().unwrap(), 0.0);
}

#[test]
fn oracle_quadrature_tolerance() {
    let out = run(&["oracle", "ib", "--m", "1", "--n", "3", "--method", "quadrature"]);
    let v = stdout_json(&out);
    assert!(v["results"]["deviation_rel"].as_f64().unwrap() < 1e-6);
    assert_eq!(v["results"]["passed"], true);
}

#[test]
fn oracle_rejects_large_dims() {
    let out = run(&["oracle", "ia", "--m", "4", "--n", "9", "--method", "symbolic"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mc_report_and_thread_determinism() {
    let args = [
        "mc", "--m", "2", "--n", "2", "--samples", "30000", "--seed", "7",
    ];
    let single: Vec<String> = args
        .iter()
        .map(|s| s.to_string())
        .chain(["--threads".into(), "1".into()])
        .collect();
    let quad: Vec<String> = args
        .iter()
        .map(|s| s.to_string())
        .chain(["--threads".into(), "4".into()])
        .collect();
    let a = run(&single.iter().map(String::as_str).collect::<Vec<_>>());
    let b = run(&quad.iter().map(String::as_str).collect::<Vec<_>>());
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout, "reports differ across thread counts");
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["results"]["invariants"]["passed"], true);
    assert!(v["results"]["mean_s"]["z"].as_f64().unwrap().abs() < 4.0);
}

#[test]
fn mc_rejects_tiny_sample_count() {
    let out = run(&["mc", "--m", "2", "--n", "2", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_overrides_gate_the_checks() {
    // an absurdly tight z bound must flip the mc gate to a failure exit
    let out = run(&[
        "mc", "--m", "2", "--n", "2", "--samples", "20000", "--seed", "7",
        "--z-bound", "0.001",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["z_bound"].as_f64().unwrap(), 0.001);
    assert_eq!(v["summary"]["all_passed"], false);

    let out = run(&[
        "oracle", "ia", "--m", "2", "--n", "3", "--method", "quadrature",
        "--tolerance", "1e-3",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["tolerance"].as_f64().unwrap(), 1e-3);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("entmom-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "moments",
        "--m",
        "2",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["config"]["command"], "moments");
    std::fs::remove_dir_all(&dir).unwrap();
}
