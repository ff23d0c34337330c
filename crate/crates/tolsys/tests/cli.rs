//! End-to-end checks of the `tolsys` binary: output schemas, exit codes,
//! and determinism of the machine-readable formats.

use std::path::Path;
use std::process::{Command, Output};

fn tolsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tolsys"))
        .args(args)
        .output()
        .expect("spawn tolsys")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

#[test]
fn analyze_reports_invariants_and_oracle_agreement() {
    let dir = tempfile::tempdir().unwrap();
    // band p=5 N=2
    let path = write(
        dir.path(),
        "band.json",
        r#"{"n": 5, "edges": [[0,1],[0,2],[1,2],[1,3],[2,3],[2,4],[3,4]]}"#,
    );
    let out = tolsys(&["analyze", &path]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["n"], 5);
    assert_eq!(report["connected"], true);
    assert_eq!(report["diameter"], 2);
    assert_eq!(report["propagation"]["overall"], 2);
    assert_eq!(report["envelope_blocks"], serde_json::json!([5]));
    assert_eq!(report["oracle"]["propagation_agrees"], true);
    assert_eq!(report["oracle"]["blocks_agree"], true);
    assert_eq!(report["seed"], 42);
    assert!(report["input"]["fnv1a64"].as_str().unwrap().len() == 16);
}

#[test]
fn analyze_identity_relation_has_unit_components() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "id.json", r#"{"n": 3, "edges": []}"#);
    let out = tolsys(&["analyze", &path]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["connected"], false);
    assert_eq!(report["diameter"], serde_json::Value::Null);
    assert_eq!(
        report["propagation"]["per_component"],
        serde_json::json!([1, 1, 1])
    );
    assert_eq!(report["envelope_blocks"], serde_json::json!([1, 1, 1]));
}

#[test]
fn malformed_input_exits_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", r#"{"n": 3, "edges": [[0, 9]]}"#);
    let out = tolsys(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("edges[0]"), "stderr: {stderr}");
    // unparseable JSON also exits 2
    let path = write(dir.path(), "garbage.json", "not json at all");
    let out = tolsys(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariant_violation_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "asym.json",
        r#"{"n": 2, "adj": [[true, true], [false, true]]}"#,
    );
    let out = tolsys(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("symmetric"), "stderr: {stderr}");
}

#[test]
fn states_reports_purity_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let relation = write(dir.path(), "id2.json", r#"{"n": 2, "edges": []}"#);
    let sqrt_half = (0.5f64).sqrt();
    let vector = write(
        dir.path(),
        "v.json",
        &format!(r#"{{"v": [[{sqrt_half}, 0.0], [{sqrt_half}, 0.0]]}}"#),
    );
    let out = tolsys(&["states", &relation, "--vector", &vector]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["support"], serde_json::json!([0, 1]));
    assert_eq!(
        report["eps_connected_classes"],
        serde_json::json!([[0], [1]])
    );
    assert_eq!(report["is_pure"], false);
    assert_eq!(report["oracle_agrees"], true);
}

#[test]
fn sweep_band_csv_has_paper_column() {
    let out = tolsys(&[
        "sweep",
        "--family",
        "band",
        "--p-min",
        "4",
        "--p-max",
        "6",
        "--width-min",
        "1",
        "--width-max",
        "2",
    ]);
    assert!(out.status.success());
    let csv = String::from_utf8_lossy(&out.stdout);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,p,width,eps,predicted,paper_ceil_p_over_n,oracle,predicted_matches,paper_matches"
    );
    // p=4 N=1: predicted 3, paper ceil(4/1)=4, oracle 3, flagged
    let row = csv.lines().find(|l| l.starts_with("band,4,1,")).unwrap();
    assert_eq!(row, "band,4,1,,3,4,3,true,false");
}

#[test]
fn sweep_circle_matches_formula() {
    let out = tolsys(&[
        "sweep",
        "--family",
        "circle",
        "--p",
        "1000",
        "--eps",
        "0.3,0.21,0.11",
    ]);
    assert!(out.status.success());
    let csv = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("circle,1000,299,0.3,2,,2,true,"));
    assert!(rows[1].starts_with("circle,1000,209,0.21,3,,3,true,"));
    assert!(rows[2].starts_with("circle,1000,109,0.11,5,,5,true,"));
}

#[test]
fn sweep_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("table.csv");
    let out = tolsys(&[
        "sweep",
        "--family",
        "circulant",
        "--p-min",
        "6",
        "--p-max",
        "6",
        "--width-min",
        "1",
        "--width-max",
        "3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(csv.lines().count(), 1 + 3);
}

#[test]
fn metric_check_reports_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(
        dir.path(),
        "two.json",
        r#"{"n": 2, "edges": [[0, 1, 1.0]]}"#,
    );
    let out = tolsys(&[
        "metric-check",
        "--graph",
        &graph,
        "--eps1",
        "0.6",
        "--eps2",
        "0.6",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["holds"], false);
    assert_eq!(report["missing_pairs"], serde_json::json!([[0, 1]]));
    assert_eq!(report["extra_pairs"], serde_json::json!([]));

    let out = tolsys(&[
        "metric-check",
        "--circle",
        "1000",
        "--eps1",
        "0.0503",
        "--eps2",
        "0.0504",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["holds"], true);
}

#[test]
fn partition_reports_both_band_conventions() {
    let out = tolsys(&["partition", "--p", "10", "--eps", "0.25"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["band"], 1);
    assert_eq!(report["relation_summary"]["point_band"], 2);
    assert_eq!(report["propagation"], 9);
    // integer boundary: eps*p = 2, conventions agree
    let out = tolsys(&["partition", "--p", "10", "--eps", "0.2"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["band"], 1);
    assert_eq!(report["relation_summary"]["point_band"], 1);
    // eps below the cell width is rejected
    let out = tolsys(&["partition", "--p", "10", "--eps", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_cap_does_not_change_report_bytes() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_tolsys"))
            .args(["verify", "numerical-radius", "--trials", "50", "--seed", "9"])
            .env("TOLSYS_THREADS", threads)
            .output()
            .expect("spawn tolsys");
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn verify_suite_reports_and_exit_codes() {
    let out = tolsys(&["verify", "schur-lemma", "--n", "4", "--seed", "7"]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["suite"], "schur-lemma");
    assert_eq!(reports[0]["cases"], 64);
    assert_eq!(reports[0]["failures"], serde_json::json!([]));
    assert_eq!(reports[0]["seed"], 7);
    // unknown suite is a usage error
    let out = tolsys(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
