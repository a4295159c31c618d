//! End-to-end tests of the `coserial` binary: exit-code contract,
//! golden fragments, and determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coserial"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

/// Materialize a fixture via `gen` into a temp file.
fn fixture_file(name: &str, tag: &str) -> PathBuf {
    let out = run(&["gen", name]);
    assert!(out.status.success(), "gen {} failed", name);
    let path = std::env::temp_dir().join(format!("coserial-test-{}.quiver", tag));
    fs::write(&path, out.stdout).expect("temp file writable");
    path
}

#[test]
fn classify_crown_is_serial_exit_zero() {
    let file = fixture_file("crown(3)", "classify-crown3");
    let out = run(&["classify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"shape\": \"ATilde_3\""), "got: {}", text);
    assert!(text.contains("\"right_serial\": true"));
    assert!(text.contains("SerialCrown(3)"));
}

#[test]
fn classify_vee_exits_one_with_witness() {
    let file = fixture_file("vee", "classify-vee");
    let out = run(&["classify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("\"right_serial\": false"));
    assert!(
        text.contains("vertex 3"),
        "witness names the bad vertex: {}",
        text
    );
}

#[test]
fn classify_malformed_file_exits_two() {
    let path = std::env::temp_dir().join("coserial-test-malformed.quiver");
    fs::write(&path, "vertex a\nfrobnicate\n").unwrap();
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("line 2"),
        "parse errors carry line numbers"
    );
}

#[test]
fn classify_missing_file_exits_two() {
    let out = run(&["classify", "/nonexistent/quiver"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn localize_triangle_doubles_the_label() {
    let file = fixture_file("triangle", "localize-tri");
    let out = run(&["localize", "--keep", "1,3", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("arrow 1 3 2 2"),
        "two paths sum to (2,2): {}",
        text
    );
    assert_eq!(
        text.matches("\"vertices\"").count(),
        2,
        "two evidence paths"
    );
}

#[test]
fn localize_crown_at_one_vertex_gives_a_plain_loop() {
    let file = fixture_file("crown(3)", "localize-crown3");
    let out = run(&["localize", "--keep", "1", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("arrow 1 1\n"),
        "loop (1,1): {}",
        stdout(&out)
    );
}

#[test]
fn localize_line_endpoints() {
    let file = fixture_file("line(3)", "localize-line3");
    let out = run(&["localize", "--keep", "1,3", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("arrow 1 3\n"),
        "single through-path: {}",
        stdout(&out)
    );
}

#[test]
fn localize_unknown_vertex_exits_two() {
    let file = fixture_file("line(3)", "localize-unknown");
    let out = run(&["localize", "--keep", "1,zz", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown vertex"));
}

#[test]
fn localize_reports_infinite_pairs() {
    let path = std::env::temp_dir().join("coserial-test-infinite.quiver");
    fs::write(
        &path,
        "vertex a\nvertex b\nvertex c\narrow a b\narrow b b\narrow b c\n",
    )
    .unwrap();
    let out = run(&["localize", "--keep", "a,c", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("\"infinite\": true"),
        "torsion loop makes (a,c) infinite: {}",
        text
    );
    assert!(text.contains("\"a\"") && text.contains("\"c\""));
}

#[test]
fn arq_crown_two_depth_four() {
    let file = fixture_file("crown(2)", "arq-crown2");
    let out = run(&["arq", "--depth", "4", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
    assert_eq!(v["tube_rank"], 2);
}

#[test]
fn arq_line_three_verified_mesh() {
    let file = fixture_file("line(3)", "arq-line3");
    let out = run(&["arq", "--depth", "3", "--verify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(v["verified"], true);
}

#[test]
fn arq_writes_dot() {
    let file = fixture_file("line(3)", "arq-dot");
    let dot_path = std::env::temp_dir().join("coserial-test-line3.dot");
    let out = run(&[
        "arq",
        "--depth",
        "3",
        "--dot",
        dot_path.to_str().unwrap(),
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("style=dashed"), "tau arrows are dashed");
}

#[test]
fn arq_refuses_non_serial_input() {
    let file = fixture_file("vee", "arq-vee");
    let out = run(&["arq", "--depth", "2", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("vertex 3"),
        "refusal names the witness"
    );
}

#[test]
fn verify_known_suite_passes() {
    let out = run(&["verify", "--suite", "periodicity"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[PASS]"));
}

#[test]
fn verify_honors_seed_flag_and_env() {
    let out = run(&["verify", "--suite", "duality", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .args(["verify", "--suite", "duality"])
        .env("COSERIAL_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_unknown_suite_exits_two() {
    let out = run(&["verify", "--suite", "nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn gen_outputs_parse_back() {
    for name in [
        "line(4)",
        "crown(3)",
        "two-loop",
        "vee",
        "triangle",
        "window-biinfinite(4)",
    ] {
        let out = run(&["gen", name]);
        assert_eq!(out.status.code(), Some(0), "gen {}", name);
        coserial_core::parse_quiver(&stdout(&out)).expect("generator output parses");
    }
    let out = run(&["gen", "moebius"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let file = fixture_file("crown(3)", "determinism");
    for args in [
        vec!["classify", file.to_str().unwrap()],
        vec!["localize", "--keep", "1,2", file.to_str().unwrap()],
        vec!["arq", "--depth", "3", file.to_str().unwrap()],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(
            a.stdout, b.stdout,
            "non-deterministic output for {:?}",
            args
        );
    }
}
