use std::process::{Command, Output};

use serde_json::Value;

fn cyclograph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclograph"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn comparison<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["comparisons"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no comparison {name}"))
}

#[test]
fn verify_example1_matches() {
    let out = cyclograph(&["verify", "fixtures/example1.json", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["order"], 24);
    assert_eq!(report["detection"]["case"], "B");
    let delta = comparison(&report, "delta");
    assert_eq!((delta["formula"].as_u64(), delta["brute"].as_u64()), (Some(13), Some(13)));
    assert_eq!(delta["status"], "match");
    assert_eq!(comparison(&report, "gamma")["brute"], 5);
}

#[test]
fn delta_of_sym4_by_brute_force() {
    let out = cyclograph(&["delta", r#"{"kind":"sym","n":4}"#, "--method", "brute", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.trim_start().starts_with("{\n  \"component_count\": 13,"), "{text}");
    let v = json(&out);
    assert_eq!(v["method"], "brute-force");
    assert_eq!(v["vertex_count"], 23);
}

#[test]
fn delta_formula_reports_its_inputs() {
    let out = cyclograph(&["delta", "example2", "--method", "formula", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["component_count"], 31);
    assert_eq!(v["formula"]["name"], "ThmC");
    assert_eq!(v["formula"]["inputs"]["m_p_star"], 3);
    assert_eq!(v["formula"]["inputs"]["index_L_K"], 3);
}

#[test]
fn info_on_example6_uses_the_structured_path() {
    let out = cyclograph(&["info", "fixtures/example6.json", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["detection"]["case"], "C");
    assert_eq!(v["detection"]["K_order"], 32768);
    assert_eq!(v["detection"]["H_order"], 151);
    assert!(v["brute_force"].as_str().unwrap().starts_with("skipped"));
    let counts = v["counts"].as_array().unwrap();
    let delta = counts.iter().find(|c| c["graph"] == "cyclic").unwrap();
    assert_eq!(delta["method"], "structured");
    assert_eq!(delta["value"], 32768 + 151 + 27180);
    assert!(counts.iter().all(|c| c["method"] != "brute-force"));
}

#[test]
fn verify_affine_examples() {
    for name in ["example2", "example3", "example4", "a4", "s3"] {
        let out = cyclograph(&["verify", name]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stdout));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(!text.contains("mismatch"), "{text}");
    }
}

#[test]
fn frobenius_report_shows_both_brute_counts() {
    let v = json(&cyclograph(&["info", "a4", "--json"]));
    let counts = v["counts"].as_array().unwrap();
    let find = |graph: &str, method: &str| {
        counts
            .iter()
            .find(|c| c["graph"] == graph && c["method"] == method)
            .map(|c| c["value"].as_u64().unwrap())
    };
    assert_eq!(find("cyclic", "brute-force"), Some(7));
    assert_eq!(find("cyclic", "formula"), Some(7));
    assert_eq!(find("commuting", "brute-force"), Some(5));
    assert_eq!(find("commuting", "formula"), None);
}

#[test]
fn json_is_deterministic() {
    let a = cyclograph(&["verify", "example4", "--json"]);
    let b = cyclograph(&["verify", "example4", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let c = cyclograph(&["delta", r#"{"kind":"sym","n":5}"#, "--json"]);
    let d = cyclograph(&["delta", r#"{"kind":"sym","n":5}"#, "--json"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(cyclograph(&["info", r#"{"kind":"perm","degree":3,"generators":[[[0,7]]]}"#]).status.code(), Some(2));
    assert_eq!(cyclograph(&["info", "no-such-spec"]).status.code(), Some(2));
    assert_eq!(cyclograph(&["info", r#"{"kind":"affine","components":[[2,2]],"d":5,"e":2}"#]).status.code(), Some(2));
    assert_eq!(cyclograph(&["delta", "example6", "--method", "brute"]).status.code(), Some(3));
    assert_eq!(cyclograph(&["--enum-cap", "10", "delta", "example1"]).status.code(), Some(3));
    assert_eq!(cyclograph(&["gamma", r#"{"kind":"sym","n":5}"#, "--method", "formula"]).status.code(), Some(2));
    let capped = cyclograph(&["--pair-cap", "10", "gamma", "example1", "--method", "brute"]);
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn auto_falls_back_to_formulas() {
    let v = json(&cyclograph(&["delta", "example6", "--json"]));
    assert_eq!(v["method"], "structured");
    let v = json(&cyclograph(&["--pair-cap", "10", "gamma", "example1", "--json"]));
    assert_eq!((v["component_count"].as_u64(), v["method"].as_str()), (Some(5), Some("formula")));
}

#[test]
fn spec_files_and_dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("s3.json");
    std::fs::write(&spec, r#"{"kind": "sym", "n": 3}"#).unwrap();
    let dot = dir.path().join("s3.dot");
    let out = cyclograph(&[
        "export-dot",
        spec.to_str().unwrap(),
        "--graph",
        "cyclic",
        "--out",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph cyclic {"));
    assert!(text.contains("4 components"));
    assert_eq!(text.matches(" -- ").count(), 1);
    assert!(text.trim_end().ends_with('}'));

    let labelled = dir.path().join("gamma.dot");
    let out = cyclograph(&[
        "export-dot",
        "example1",
        "--graph",
        "commuting",
        "--labels",
        "--out",
        labelled.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&labelled).unwrap();
    assert!(text.starts_with("graph commuting {"));
    assert!(text.contains("label=\"(0 1)\""));
    assert!(text.contains("5 components"));
}
