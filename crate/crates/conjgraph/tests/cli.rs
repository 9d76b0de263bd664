//! End-to-end tests of the command-line surface: exit codes, determinism,
//! and the group-document import path.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn catalog_lists_specs() {
    let out = run(&["catalog"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for spec in ["sym:n", "q8", "agl1:8", "ex1", "ex2", "file:"] {
        assert!(text.contains(spec), "missing {spec} in:\n{text}");
    }
}

#[test]
fn unknown_spec_exits_2() {
    let out = run(&["analyze", "--group", "monster"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("monster"));
}

#[test]
fn usage_error_exits_2() {
    let out = run(&["analyze"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_catalog_group() {
    let out = run(&["analyze", "--group", "sym:3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("|G| = 6"));
    assert!(text.contains("class sizes: {1, 2, 3}"));
    assert!(text.contains("diameter: disconnected"));
    assert!(text.contains("isolated pairs: (2, 3)"));
}

#[test]
fn graph_export_is_deterministic() {
    let a = run(&["graph", "--group", "dih:10", "--format", "json"]);
    let b = run(&["graph", "--group", "dih:10", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let dot = run(&["graph", "--group", "dih:10", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("graph class_graph {"));
    let bad = run(&["graph", "--group", "dih:10", "--format", "svg"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_small_corpus_exits_0() {
    let out = run(&[
        "verify",
        "--suite",
        "diameter_bound,complete_components",
        "--max-order",
        "100",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("counterexamples: 0"));
}

#[test]
fn verify_json_report_is_deterministic() {
    let args = ["verify", "--suite", "theoremA", "--max-order", "30", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["counterexamples"], 0);
}

#[test]
fn unknown_suite_exits_2() {
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn import_validates_documents() {
    let dir = std::env::temp_dir().join(format!("conjgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("s3.json");
    std::fs::write(
        &good,
        r#"{"name": "s3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]],
            "normal_subgroups": {"A3": [[1, 2, 0]]}}"#,
    )
    .unwrap();
    let out = run(&["import", "--file", good.to_str().unwrap(), "--check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 6"));
    assert!(text.contains("normal subgroup A3: order 3"));

    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"name": "bad", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]],
            "normal_subgroups": {"T": [[1, 0, 2]]}}"#,
    )
    .unwrap();
    let out = run(&["import", "--file", bad.to_str().unwrap(), "--check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not normal"));

    let missing = dir.join("missing.json");
    let out = run(&["import", "--file", missing.to_str().unwrap(), "--check"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn analyze_file_spec_with_fragment() {
    let dir = std::env::temp_dir().join(format!("conjgraph-frag-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.json");
    std::fs::write(
        &path,
        r#"{"name": "s3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]],
            "normal_subgroups": {"A3": [[1, 2, 0]]}}"#,
    )
    .unwrap();
    let spec = format!("file:{}#A3", path.to_str().unwrap());
    let out = run(&["analyze", "--group", &spec]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("|N| = 3"));
    assert!(text.contains("class sizes: {1, 2}"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_with_corpus_dir_skips_unreadable_entries() {
    let dir = std::env::temp_dir().join(format!("conjgraph-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("z4.json"),
        r#"{"name": "z4", "degree": 4, "generators": [[1, 2, 3, 0]]}"#,
    )
    .unwrap();
    std::fs::write(dir.join("broken.json"), "{nope").unwrap();
    let out = run(&[
        "verify",
        "--suite",
        "theoremA",
        "--max-order",
        "1",
        "--corpus",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("z4"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("broken.json"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn analyze_rejects_normal_on_catalog_specs() {
    let out = run(&["analyze", "--group", "sym:3", "--normal", "A3"]);
    assert_eq!(out.status.code(), Some(2));
}
