use std::path::Path;
use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fitting-decomp")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let path = dir.join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn det_of_a_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(dir.path(), "job.json", &json!({"ring": {"vars": ["x", "y"]}, "matrix": [["x", "y"], ["y", "x"]]}));
    let (code, stdout, _) = run(&["det", "--input", &job]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["determinant"], "x^2 - y^2");
}

#[test]
fn square_check_round_trips_through_verify_cert() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(
        dir.path(),
        "job.json",
        &json!({
            "ring": {"vars": ["x", "y"]},
            "matrix": [["x", "y"], ["y", "x"]],
            "factors": ["x - y", "x + y"],
        }),
    );
    let (code, stdout, stderr) = run(&["check-square", "--input", &job]);
    assert_eq!(code, 0, "{stderr}");
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["status"], "Decomposable");
    assert_eq!(report["provenance"]["exact"], true);

    let cert = dir.path().join("cert.json");
    std::fs::write(&cert, &stdout).unwrap();
    let (code, _, stderr) = run(&["verify-cert", "--cert", cert.to_str().unwrap()]);
    assert_eq!(code, 0, "{stderr}");
}

#[test]
fn tampered_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(
        dir.path(),
        "job.json",
        &json!({"ring": {"vars": ["x1", "x2"]}, "matrix": [["x2", "x1"], ["x1", "x2"]]}),
    );
    let (code, stdout, _) = run(&["check-conj", "--input", &job]);
    assert_eq!(code, 0);
    let mut report: Value = serde_json::from_str(&stdout).unwrap();
    let inc = &mut report["certificate"]["inclusions"][0];
    inc["element"] = json!(format!("{} + x1^5", inc["element"].as_str().unwrap()));
    let cert = write(dir.path(), "cert.json", &report);
    let (code, _, stderr) = run(&["verify-cert", "--cert", &cert]);
    assert_eq!(code, 1);
    assert!(stderr.contains("re-expand"), "{stderr}");
}

#[test]
fn text_format_and_jet_order() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(
        dir.path(),
        "job.json",
        &json!({"ring": {"vars": ["x"]}, "matrix": [["0", "x"], ["x + x^2", "0"]]}),
    );
    let (code, stdout, _) = run(&["check-conj", "--input", &job, "--format", "text"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Inconclusive"), "{stdout}");

    let (code, stdout, _) = run(&["check-conj", "--input", &job, "--jet-order", "6"]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["status"], "Decomposable");
    assert_eq!(report["provenance"]["exact"], false);
    assert_eq!(report["provenance"]["jet_order"], 6);
}

#[test]
fn quiver_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(
        dir.path(),
        "job.json",
        &json!({
            "ring": {"vars": []},
            "quiver": {
                "vertices": [{"id": "1", "rank": 1}, {"id": "2", "rank": 1}],
                "arrows": [{"from": "1", "to": "2", "matrix": [["2"]]}, {"from": "2", "to": "1", "matrix": [["3"]]}],
            },
        }),
    );
    let (code, stdout, stderr) = run(&["build-kronecker", "--input", &job]);
    assert_eq!(code, 0, "{stderr}");
    assert!(stdout.contains("y_1"), "{stdout}");
    let (code, stdout, _) = run(&["det", "--input", &job]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&stdout).unwrap();
    assert!(report["determinant"].as_str().unwrap().contains("y_1*y_2"));
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let job = write(dir.path(), "job.json", &json!({"ring": {"vars": ["x"]}, "matrix": [["x", "y"]]}));
    let (code, _, stderr) = run(&["det", "--input", &job]);
    assert_eq!(code, 1);
    assert!(!stderr.is_empty());

    let job = write(dir.path(), "extra.json", &json!({"ring": {"vars": ["x"]}, "unknown": 1}));
    assert_eq!(run(&["det", "--input", &job]).0, 1);
    assert_eq!(run(&["det", "--input", "/nonexistent/job.json"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}
