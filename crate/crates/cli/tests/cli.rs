//! Behavior of the `vq` binary: exit codes, report formats, configuration
//! precedence, and byte-level reproducibility.

use std::process::{Command, Output};

fn vq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn vq_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vq"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

#[test]
fn passing_suite_exits_zero_with_json_report() {
    let out = vq(&["verify", "exact-arith", "--seed", "42"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["suite"], "exact-arith");
    assert_eq!(report["meta"]["seed"], 42);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    // no wall time by default: the payload must be reproducible
    assert!(report["meta"].get("wall_time_ms").is_none());
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = vq(&["verify", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn bad_flag_is_usage_error() {
    let out = vq(&["verify", "exact-arith", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_range_is_usage_error() {
    let out = vq(&["verify", "multiboson", "--k", "9..2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_for_fixed_seed() {
    let a = vq(&["verify", "combinatorics", "--seed", "42", "--n-range", "0..60"]);
    let b = vq(&["verify", "combinatorics", "--seed", "42", "--n-range", "0..60"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let c = vq(&["verify", "combinatorics", "--seed", "43", "--n-range", "0..60"]);
    assert!(c.status.success());
}

#[test]
fn worker_cap_does_not_change_bytes() {
    let a = vq_env(
        &["verify", "exact-arith", "--seed", "42"],
        "VQ_THREADS",
        "1",
    );
    let b = vq(&["verify", "exact-arith", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_md_formats() {
    let csv = vq(&["verify", "exact-arith", "--format", "csv"]);
    assert!(csv.status.success());
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("suite,name,status,params,expected,actual,residual\n"));

    let md = vq(&["verify", "exact-arith", "--format", "md"]);
    assert!(md.status.success());
    assert!(String::from_utf8_lossy(&md.stdout).starts_with("# Verification report"));
}

#[test]
fn out_writes_file() {
    let dir = std::env::temp_dir().join(format!("vq-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = vq(&["verify", "exact-arith", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["suite"], "exact-arith");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn config_file_applies_and_flags_override() {
    let dir = std::env::temp_dir().join(format!("vq-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("vq.conf");
    std::fs::write(&cfg_path, "# comment\nseed=7\nn-range=0..50\nformat=csv\n").unwrap();

    let from_file = vq(&["verify", "combinatorics", "--config", cfg_path.to_str().unwrap()]);
    assert!(from_file.status.success());
    let text = String::from_utf8(from_file.stdout).unwrap();
    assert!(text.starts_with("suite,name,"), "config format honored");

    // flag overrides the file's format back to json and reseeds
    let overridden = vq(&[
        "verify",
        "combinatorics",
        "--config",
        cfg_path.to_str().unwrap(),
        "--format",
        "json",
        "--seed",
        "9",
    ]);
    assert!(overridden.status.success());
    let report: serde_json::Value = serde_json::from_slice(&overridden.stdout).unwrap();
    assert_eq!(report["meta"]["seed"], 9);

    let bad = vq(&["verify", "combinatorics", "--config", "/nonexistent/vq.conf"]);
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timing_flag_adds_wall_time() {
    let out = vq(&["verify", "exact-arith", "--timing"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["meta"]["wall_time_ms"].is_u64());
}

#[test]
fn mc_rows_carry_seed_and_samples() {
    let out = vq(&["verify", "laughlin", "--seed", "42", "--samples", "20000"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let mc_rows: Vec<_> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"] == "plasma.mc_agreement")
        .collect();
    assert!(!mc_rows.is_empty());
    for row in mc_rows {
        assert!(row["params"]["seed"].is_string());
        assert_eq!(row["params"]["samples"], "20000");
    }
}
