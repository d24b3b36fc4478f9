use std::path::Path;
use std::process::{Command, Output};

fn hopfcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let hopf = dir.path().join("s3.json");
    let out = hopfcalc(&["build", "--catalog", "S3", "--out", path_str(&hopf)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let sub = dir.path().join("sub.json");
    std::fs::write(&sub, r#"{"subgroup": ["(123)"]}"#).unwrap();
    let report_path = dir.path().join("report.json");
    let out = hopfcalc(&[
        "analyze",
        "--hopf",
        path_str(&hopf),
        "--sub",
        path_str(&sub),
        "--out",
        path_str(&report_path),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
    assert_eq!(report["algebra"]["dim"], 6);
    assert_eq!(report["sub"]["dim"], 3);
    assert_eq!(report["sub"]["normal"], true);
    assert_eq!(report["sub"]["c1_dim"], 2);
    assert_eq!(report["sub"]["c2_dim"], 1);
    assert_eq!(report["sub"]["index"], "2");
    // input hashes are recorded for both files
    assert_eq!(report["inputs"].as_object().unwrap().len(), 2);
}

#[test]
fn build_writes_canonical_json() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = hopfcalc(&["build", "--catalog", "double:C2", "--out", path_str(p)]);
        assert!(out.status.success());
    }
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}

#[test]
fn corrupted_input_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let hopf = dir.path().join("c2.json");
    let out = hopfcalc(&["build", "--catalog", "C2", "--out", path_str(&hopf)]);
    assert!(out.status.success());
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&hopf).unwrap()).unwrap();
    // rewrite one structure constant so the axioms fail
    doc["mult"][0] = serde_json::json!([0, 0, 1, "1"]);
    std::fs::write(&hopf, serde_json::to_string(&doc).unwrap()).unwrap();
    let report_path = dir.path().join("report.json");
    let out = hopfcalc(&[
        "analyze",
        "--hopf",
        path_str(&hopf),
        "--out",
        path_str(&report_path),
    ]);
    assert!(!out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    let first = &report["checks"][0];
    assert_eq!(first["id"], "input-axioms");
    assert_eq!(first["status"], "fail");
    assert!(first["witness"].as_str().is_some());
}

#[test]
fn unknown_catalog_is_an_error() {
    let out = hopfcalc(&["build", "--catalog", "M11"]);
    assert!(!out.status.success());
}

#[test]
fn unknown_suite_is_an_error() {
    let out = hopfcalc(&["verify", "--suite", "everything"]);
    assert!(!out.status.success());
}

#[test]
fn conductor_cap_is_enforced() {
    // the group algebra itself is rational, but its characters need seventh
    // roots of unity, so analysis under a tight cap must fail
    let dir = tempfile::tempdir().unwrap();
    let hopf = dir.path().join("c7.json");
    let out = hopfcalc(&["build", "--catalog", "C7", "--out", path_str(&hopf)]);
    assert!(out.status.success());
    let out = hopfcalc(&["analyze", "--hopf", path_str(&hopf), "--conductor-max", "2"]);
    assert!(!out.status.success());
    let out = hopfcalc(&["analyze", "--hopf", path_str(&hopf), "--conductor-max", "7"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn conductor_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let hopf = dir.path().join("c7.json");
    let out = hopfcalc(&["build", "--catalog", "C7", "--out", path_str(&hopf)]);
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcalc"))
        .args(["analyze", "--hopf", path_str(&hopf)])
        .env("HOPFCALC_CONDUCTOR_MAX", "2")
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn verify_axioms_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.json");
    let out = hopfcalc(&["verify", "--suite", "axioms", "--out", path_str(&report_path)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
    assert!(report["summary"]["passed"].as_u64().unwrap() > 0);
    // deterministic check ordering: first record is the first catalog entry
    assert_eq!(report["checks"][0]["subject"], "C2");
}
