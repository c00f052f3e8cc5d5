use std::process::{Command, Output};

use serde_json::Value;

fn aalpha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aalpha"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = aalpha(&full);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (out.status.code().unwrap(), doc)
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn lambda_of_k5() {
    let (code, doc) = json(&["lambda", "--graph6", "D~{", "--alpha", "0.3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][0]["lambda"].as_f64().unwrap(), 4.0);
    assert_eq!(doc["results"][0]["perron"].as_array().unwrap().len(), 5);
}

#[test]
fn lambda_of_p3_text() {
    let out = aalpha(&["lambda", "--graph6", "Bo", "--alpha", "0"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("lambda=1.41421356237"));
}

#[test]
fn lambda_from_edge_list() {
    let dir = std::env::temp_dir().join(format!("aalpha-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p3.txt");
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let (code, doc) = json(&["lambda", "--edges", path.to_str().unwrap(), "--alpha", "0.5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][0]["lambda"].as_f64().unwrap(), 1.5);
}

#[test]
fn disconnected_input_is_an_input_error() {
    let out = aalpha(&["lambda", "--graph6", "B_"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("disconnected"));
}

#[test]
fn bad_inputs() {
    assert_eq!(
        aalpha(&["lambda", "--graph6", "D~{", "--alpha", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(aalpha(&["lambda", "--graph6", "Z"]).status.code(), Some(2));
    assert_eq!(aalpha(&["lambda"]).status.code(), Some(5));
    assert_eq!(aalpha(&["frobnicate"]).status.code(), Some(5));
    assert_eq!(aalpha(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_envelope_shape() {
    let (_, doc) = json(&["join", "1,2,2,1", "--alpha", "0.5"]);
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "command", "params", "results", "version"]);
    assert_eq!(doc["command"], "join");
    for c in doc["checks"].as_array().unwrap() {
        for key in ["spec", "alpha", "claim", "lhs", "rhs", "margin", "pass"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn exhaustive_search_matches() {
    let (code, doc) = json(&[
        "search",
        "--n",
        "7",
        "--k",
        "2",
        "--d",
        "3",
        "--alpha",
        "0.5",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][0]["matches_prediction"], true);
    assert_eq!(doc["results"][0]["graphs_examined"].as_u64().unwrap(), 1 << 21);
}

#[test]
fn critical_search_finds_bulge() {
    let (code, doc) = json(&[
        "search", "--n", "12", "--k", "2", "--d", "4", "--alpha", "0.25", "--mode", "critical",
    ]);
    assert_eq!(code, 0);
    let best = &doc["results"][0]["best_specs"];
    assert_eq!(best, &serde_json::json!([[1, 2, 6, 2, 1]]));
}

#[test]
fn critical_search_csv() {
    let path = std::env::temp_dir().join(format!("aalpha-table-{}.csv", std::process::id()));
    let out = aalpha(&[
        "search",
        "--n",
        "10",
        "--k",
        "2",
        "--d",
        "4",
        "--alpha",
        "0,0.5",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,composition,lambda"));
    // six compositions of 8 into three parts >= 2, at two alpha values
    assert_eq!(lines.count(), 12);
}

#[test]
fn infeasible_class() {
    let out = aalpha(&["search", "--n", "5", "--k", "2", "--d", "4"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn unknown_suite_is_usage_error() {
    assert_eq!(aalpha(&["verify", "--suite", "nope"]).status.code(), Some(5));
    assert_eq!(
        aalpha(&["search", "--n", "9", "--k", "2", "--d", "3", "--mode", "nope"])
            .status
            .code(),
        Some(5)
    );
}

#[test]
fn shift_suite_passes() {
    let (code, doc) = json(&["verify", "--suite", "shifts", "--trials", "200", "--seed", "42"]);
    assert_eq!(code, 0);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 200);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_is_deterministic() {
    let a = aalpha(&["--json", "verify", "--suite", "lemmas", "--seed", "1", "--trials", "50"]);
    let b = aalpha(&["--json", "verify", "--suite", "lemmas", "--seed", "1", "--trials", "50"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bounds_sandwich() {
    let (code, doc) = json(&["bounds", "--n", "10", "--k", "2", "--d", "4", "--alpha", "0.3"]);
    assert_eq!(code, 0);
    let r = &doc["results"][0];
    assert!(r["lower"].as_f64() < r["lambda"].as_f64());
    assert_eq!(r["upper"].as_f64().unwrap(), 7.0);
}

#[test]
fn bounds_report_the_small_diameter_overshoot() {
    let (code, doc) = json(&["bounds", "--n", "6", "--k", "2", "--d", "2", "--alpha", "0.6"]);
    assert_eq!(code, 3);
    assert_eq!(doc["checks"][0]["pass"], false);
}

#[test]
fn bounds_outside_scope() {
    assert_eq!(
        aalpha(&["bounds", "--n", "7", "--k", "2", "--d", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_aalpha"))
        .args(["search", "--n", "9", "--k", "2", "--d", "3"])
        .env("AALPHA_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_aalpha"))
        .args(["search", "--n", "9", "--k", "2", "--d", "3"])
        .env("AALPHA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}
