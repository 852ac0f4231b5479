use std::process::{Command, Output};

use serde_json::Value;

fn poncelet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poncelet"))
        .args(args)
        .env_remove("PONCELET_PORT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn family_prints_the_rhombus_constants() {
    let o = poncelet(&["family", "--a", "2", "--b", "1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let vals: Vec<f64> = stdout(&o)
        .lines()
        .map(|l| l.split('=').nth(1).unwrap().trim().parse().unwrap())
        .collect();
    let want = [1.7888544, 0.4472136, 0.4472136, 8.9442719];
    for (v, w) in vals.iter().zip(want) {
        assert!((v - w).abs() < 1e-7, "{v} vs {w}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["family", "--a", "2"][..],
        &["family", "--a", "x", "--n", "4"],
        &["family", "--a", "1", "--b", "2", "--n", "4"],
        &["frobnicate"],
        &["orbit", "--a", "2", "--n", "4", "--layers", "pedal"],
        &["sweep", "--quantity", "k999", "--a", "2", "--n", "4"],
        &["sweep", "--quantity", "k105", "--a", "2", "--n", "6"],
        &["verify", "--a", "2", "--n", "5", "--samples", "4"],
        &["report", "/nonexistent/report.json"],
    ] {
        let o = poncelet(args);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn computation_failures_exit_1() {
    let o = poncelet(&[
        "orbit",
        "--a",
        "2",
        "--n",
        "4",
        "--t",
        "0",
        "--layers",
        "inversive:2;0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("inversive"));
}

#[test]
fn orbit_json() {
    let o = poncelet(&[
        "orbit",
        "--a",
        "2",
        "--n",
        "4",
        "--t",
        "0",
        "--layers",
        "outer,evolute",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["layers"][1]["layer"], "evolute");
}

#[test]
fn sweep_k101_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k101.csv");
    let o = poncelet(&[
        "sweep",
        "--quantity",
        "k101",
        "--a",
        "2",
        "--b",
        "1",
        "--n",
        "4",
        "--samples",
        "64",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,value"));
    let values: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values.len(), 64);
    assert!(values.iter().all(|v| v.abs() < 1e-10));
}

#[test]
fn verify_reports_k118_as_half_the_perimeter() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = poncelet(&[
        "verify",
        "--a",
        "2",
        "--b",
        "1",
        "--n",
        "5",
        "--samples",
        "128",
        "--out",
        out.to_str().unwrap(),
    ]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let reports = v["reports"].as_array().unwrap();
    let k118 = reports.iter().find(|r| r["id"] == "k118").unwrap();
    let fam = poncelet(&["family", "--a", "2", "--b", "1", "--n", "5", "--json"]);
    let fam: Value = serde_json::from_str(&stdout(&fam)).unwrap();
    let half = fam["L"].as_f64().unwrap() / 2.0;
    for m in k118["mean"].as_array().unwrap() {
        assert!((m.as_f64().unwrap() - half).abs() < 1e-8 * half);
    }
    // k811 varies at N=5, so the run fails honestly and exits 1
    let failing: Vec<_> = reports
        .iter()
        .filter(|r| r["verdict"] != "invariant")
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["k811"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k811"));
}

#[test]
fn verify_passes_on_rows_that_hold() {
    let o = poncelet(&[
        "verify",
        "--a",
        "1.5,2",
        "--n",
        "4,5",
        "--samples",
        "32",
        "--ids",
        "k101,k118,k201",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        poncelet(&[
            "verify",
            "--a",
            "1.25,2",
            "--n",
            "3,4,6",
            "--samples",
            "32",
            "--out",
            out.to_str().unwrap(),
        ]);
        std::fs::read(out).unwrap()
    };
    assert_eq!(run("one.json"), run("two.json"));
}

#[test]
fn report_renders_a_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    poncelet(&[
        "verify",
        "--a",
        "2",
        "--n",
        "4",
        "--samples",
        "16",
        "--ids",
        "k101,k806b",
        "--out",
        out.to_str().unwrap(),
    ]);
    let o = poncelet(&["report", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("id"));
    assert!(text.contains("k806b") && text.contains("flagged"));
    assert!(text.trim_end().ends_with("PASS"));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"reports\": 3}").unwrap();
    assert_eq!(
        poncelet(&["report", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn serve_rejects_a_bad_port_variable() {
    let o = Command::new(env!("CARGO_BIN_EXE_poncelet"))
        .arg("serve")
        .env("PONCELET_PORT", "not-a-port")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
