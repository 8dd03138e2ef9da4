use std::process::{Command, Output};

use serde_json::Value;

fn curv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curv"))
        .args(args)
        .output()
        .expect("curv runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_sphere_float() {
    let out = curv(&["compute", "--model", "sphere:n=4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let c = &v["curvature"];
    assert!((c["scal"].as_f64().unwrap() - 12.0).abs() < 1e-9);
    assert!((c["h4"].as_f64().unwrap() - 6.0).abs() < 1e-9);
    assert!(c["duality"]["self_dual_defect"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(v["engine"], "dual");
    assert_eq!(v["basis"]["2"].as_array().unwrap().len(), 6);
}

#[test]
fn compute_rational_is_exact() {
    let out = curv(&[
        "compute",
        "--model",
        "sphere:n=3,radius=2",
        "--mode",
        "rational",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["mode"], "rational");
    assert_eq!(v["curvature"]["scal"], "3/2");
}

#[test]
fn compute_rational_rejects_chart_only_models() {
    let out = curv(&[
        "compute",
        "--model",
        "perturbed_flat:n=3,seed=1",
        "--mode",
        "rational",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_writes_file_and_reads_model_file() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.json");
    std::fs::write(&model, r#"{"model": "product", "params": {"factors": [{"model": "sphere", "params": {"n": 2}}, {"model": "hyperbolic", "params": {"n": 2}}]}}"#).unwrap();
    let report = dir.path().join("r.json");
    let out = curv(&[
        "compute",
        "--model",
        model.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(
        v["curvature"]["duality"]["anti_self_dual_defect"]
            .as_f64()
            .unwrap()
            .abs()
            < 1e-9
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "--model", "torus:n=2"][..],
        &["compute", "--model", "sphere:n=3", "--point", "0,0"],
        &["compute", "--model", "sphere:n=3", "--engine", "magic"],
        &["verify", "--filter", "no\\.such_check"],
        &["verify", "--filter", "("],
        &["bench", "--n", "7"],
        &["frobnicate"],
    ] {
        assert_eq!(curv(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn degenerate_metric_exits_3() {
    let model = r#"{"polynomial_metric": {"n": 2, "epsilon": 1.0, "coefficients": [
        {"i": 0, "j": 0, "monomial": [0, 0], "value": -3.0},
        {"i": 1, "j": 1, "monomial": [0, 0], "value": -3.0}]}}"#;
    let out = curv(&["compute", "--model", model]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn models_list_names_catalog() {
    let out = curv(&["models", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "euclidean",
        "sphere",
        "hyperbolic",
        "product",
        "polynomial_metric",
    ] {
        assert!(text.contains(name), "{name}");
    }
}

#[test]
fn verify_filter_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    let out = curv(&[
        "verify",
        "--filter",
        "doubleform\\..*",
        "--mode",
        "both",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks
        .iter()
        .all(|c| c["id"].as_str().unwrap().starts_with("doubleform.")));
    assert!(checks.iter().any(|c| c["mode"] == "float"));
    assert!(checks.iter().any(|c| c["mode"] == "rational"));
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_curv"))
            .args(["verify", "--filter", "hierarchy\\..*", "--seed", "7"])
            .env("CURV_THREADS", threads)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("3"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn corrupted_suite_exits_1() {
    let out = curv(&[
        "verify",
        "--filter",
        "combinatorics\\..*",
        "--self-test-corrupt",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("harness.self_test_corrupt"));
}

#[test]
fn bench_table_and_json() {
    let out = curv(&["bench", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty());
    let out = curv(&["bench", "--n", "4", "--json"]);
    let rows = json(&out);
    assert!(rows.as_array().unwrap().iter().all(|r| r["equal"] == true));
}
