use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forge")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn golden() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/demo_n2.json")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn demo_matches_golden_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = forge(&["demo", "--n", "2", "--max-arity", "7", "--seed", "17", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let got = std::fs::read_to_string(&path).unwrap();
    let want = std::fs::read_to_string(golden()).unwrap();
    assert_eq!(got, want);

    let r: Value = serde_json::from_str(&got).unwrap();
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["sections"]["certificates"][0]["value"], "24");
    assert_eq!(r["sections"]["extension"]["branch"], "primitive_solved");
    assert_eq!(r["sections"]["stasheff"]["verified_through"], 7);
    assert!(r.get("timings_ms").is_none());
}

#[test]
fn odd_n_is_a_config_error() {
    let out = forge(&["demo", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even"));
}

#[test]
fn minimal_max_arity_skips_extension() {
    let out = forge(&["demo", "--max-arity", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["sections"]["extension"]["branch"], "skipped");
    assert_eq!(r["sections"]["stasheff"]["verified_through"], 5);
}

#[test]
fn config_file_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let path = dir.path().join("out.json");
    let body = serde_json::json!({
        "max_arity": 4,
        "random_automorphisms": 1,
        "automorphisms": [data("swap.json")],
        "complexes": [data("chain.json")],
        "report": path,
    });
    std::fs::write(&cfg, body.to_string()).unwrap();
    let out = forge(&["demo", "--max-arity", "9", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["config"]["max_arity"], 4);
    let certs = r["sections"]["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 4 + 1 + 1);
    assert_eq!(certs[4]["value"], "-24*x1");
    let tw = r["sections"]["twisted"].as_array().unwrap();
    assert!(tw.last().unwrap()["mc_deformed"].as_str().unwrap().contains("(2, 0)"));

    std::fs::write(&cfg, r#"{"n": 5}"#).unwrap();
    assert_eq!(forge(&["demo", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&cfg, r#"{"unknown": 5}"#).unwrap();
    assert_eq!(forge(&["demo", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn hh_and_kunneth_commands() {
    let out = forge(&["hh", &data("dual.json"), "--imax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["sections"]["table"]["dims"], serde_json::json!([2, 1, 1, 1]));

    let out = forge(&["kunneth", &data("dual.json"), &data("dual.json"), "--imax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["sections"]["kunneth"]["lhs"], serde_json::json!([4, 4, 5, 6]));
    assert_eq!(r["sections"]["kunneth"]["rhs"], serde_json::json!([4, 4, 5, 6]));

    assert_eq!(forge(&["hh", &data("nonassoc.json")]).status.code(), Some(2));
    assert_eq!(forge(&["hh", &data("missing.json")]).status.code(), Some(2));
    let limited = Command::new(env!("CARGO_BIN_EXE_forge"))
        .args(["kunneth", &data("dual.json"), &data("dual.json")])
        .env("FORGE_SIZE_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&limited.stderr).contains("size limit"));
}

#[test]
fn laurent_command() {
    let out = forge(&["laurent", "--imax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["sections"]["laurent"]["ranks"], serde_json::json!([1, 1, 0, 0, 0]));
}

#[test]
fn obstruction_and_twisted_commands() {
    let out = forge(&["obstruction", "--f1", &data("swap.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["sections"]["certificate"]["value"], "-24*x1");

    assert_eq!(forge(&["tw", "check", &data("koszul.json")]).status.code(), Some(0));
    assert_eq!(forge(&["tw", "check", &data("koszul.json"), "--over", "strict"]).status.code(), Some(0));
    let out = forge(&["tw", "check", &data("chain.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["failed_step"], "maurer_cartan");
    assert_eq!(forge(&["tw", "check", &data("dual.json")]).status.code(), Some(2));
}
