use std::process::{Command, Output};

use legch::report::VerificationReport;
use serde_json::Value;

fn legch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legch")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dga_trefoil_text_and_json() {
    let o = legch(&["dga", "--torus", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("∂(a1) = 1 + (1,1,1) + (1,1,2) + (1,1,1)*(2,2,1)*(1,1,2)"));

    let a = legch(&["dga", "--torus", "3", "2", "--format", "json"]);
    let b = legch(&["--format", "json", "dga", "--strands", "2", "--word", "1,1,1"]);
    assert_eq!(a.stdout, b.stdout, "same braid, same bytes");
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    assert_eq!(v["gradings"]["a2"], 1);
    assert!(v["differential"]["a1"].is_object());
}

#[test]
fn unknot_has_zero_differential() {
    let o = legch(&["dga", "--strands", "1", "--word", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("∂(a1) = 0"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["dga", "--strands", "2", "--word", "3"][..],
        &["dga", "--strands", "0", "--word", ""],
        &["dga", "--torus", "3"],
        &["dga"],
        &["certify", "--torus", "2", "4"],
        &["monodromy", "--torus", "3", "6"],
        &["moves"],
        &["frobnicate"],
    ] {
        let o = legch(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = legch(&["certify", "--torus", "2", "4"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd ≠ 1"));
}

#[test]
fn augment_torus_34_and_pure_braid() {
    let o = legch(&["augment", "--torus", "3", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("X = [(1,1,1)@pos3, (2,1,1)@pos5, (3,1,1)@pos7]\n"));
    let o = legch(&["augment", "--strands", "2", "--word", "1,1"]);
    assert!(stdout(&o).starts_with("X = []\n"));
}

#[test]
fn augment_writes_dot() {
    let dir = std::env::temp_dir().join(format!("legch-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graph.dot");
    let o = legch(&["augment", "--torus", "5", "4", "--dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("// selected crossings: [\"(1,"));
    assert!(dot.contains("digraph"));
    assert!(dot.contains("[style=dashed, label="));
    assert!(dot.contains("[style=solid]"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn certify_single_pair_and_report_round_trip() {
    let o = legch(&["certify", "--torus", "2", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report = VerificationReport::from_json(&text).unwrap();
    assert!(report.checks.iter().any(|c| c.name == "order" && c.details.contains("order Some(5)")));
    assert_eq!(report.to_json() + "\n", text);
}

#[test]
fn certify_flags_q2_and_exits_on_failures() {
    let o = legch(&["certify", "--torus", "3", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "flagged rows do not fail the run");
    let report = VerificationReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.summary.flagged, 1);

    let o = legch(&["certify", "--torus", "4", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  orbit-pattern"));
}

#[test]
fn monodromy_emits_orbit_json() {
    let o = legch(&["monodromy", "--torus", "3", "4", "--emit", "orbit", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["minimal_period"], 7);
    assert_eq!(v["base"], "b[3,3]");

    let o = legch(&["monodromy", "--torus", "3", "2", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["b[1,1]"].is_object(), "{v}");
}

#[test]
fn moves_demo_and_out_file() {
    let path = std::env::temp_dir().join(format!("legch-moves-{}.json", std::process::id()));
    let o = legch(&["moves", "--demo", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert!(v.as_array().unwrap().iter().all(|d| d["chain_map"] == true));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn config_file_and_seed_are_read() {
    let path = std::env::temp_dir().join(format!("legch-config-{}.toml", std::process::id()));
    std::fs::write(&path, "[certify]\nchain_range = 3\n").unwrap();
    let o = legch(&["--config", path.to_str().unwrap(), "--seed", "9", "certify", "--torus", "3", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("monodromy-period"), "chain checks stop at chain_range");
    std::fs::write(&path, "bogus = 1\n").unwrap();
    let o = legch(&["--config", path.to_str().unwrap(), "certify", "--torus", "2", "3"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}
