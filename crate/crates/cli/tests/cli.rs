use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypermaps"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmpfile(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hypermaps-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn build_p2_text_format() {
    let out = run(&["build", "--family", "p2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("8"));
    assert_eq!(lines.next(), Some("1 0 3 2 5 4 7 6"));
}

#[test]
fn info_reports_invariants() {
    let out = run(&["info", "torus"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let field = |name: &str| {
        text.lines()
            .find(|l| l.starts_with(name))
            .unwrap_or_else(|| panic!("missing field {name}"))
            .split_whitespace()
            .last()
            .unwrap()
            .to_owned()
    };
    assert_eq!(field("flags:"), "32");
    assert_eq!(field("chi:"), "0");
    assert_eq!(field("orientable:"), "true");
}

#[test]
fn info_json_is_structured() {
    let out = run(&["info", "p2", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["flags"], 8);
    assert_eq!(v["genus"], 0);
}

#[test]
fn apply_phi2_to_p2_gives_the_quoted_bipartite_type() {
    let path = tmpfile("phi2p2");
    let out = run(&[
        "apply",
        "phi",
        "--spec",
        "phi2",
        "p2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let info = run(&["info", path.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&info)).unwrap();
    assert_eq!(v["flags"], 16);
    let mut bt: Vec<u64> = v["bipartite_type"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    bt[..2].sort_unstable();
    assert_eq!(bt, vec![1, 2, 4, 4]);
    std::fs::remove_file(path).ok();
}

#[test]
fn apply_reads_and_writes_files_round_trip() {
    let src = tmpfile("src");
    assert!(run(&["build", "--family", "klein", "--out", src.to_str().unwrap()])
        .status
        .success());
    let out = run(&["apply", "double-cover", src.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("32"));
    std::fs::remove_file(src).ok();
}

#[test]
fn check_true_and_false_exit_codes() {
    let ok = run(&["check", "regular", "torus"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "true");

    let no = run(&["check", "regular", "klein"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no).trim(), "false");
}

#[test]
fn check_in_im_requires_spec() {
    let out = run(&["check", "in-im", "torus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["check", "in-im", "--spec", "phi1", "torus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compare_covering_and_iso() {
    let covers = run(&["compare", "--covering", "torus", "klein"]);
    assert_eq!(covers.status.code(), Some(0));
    let not_covered = run(&["compare", "--covering", "klein", "torus"]);
    assert_eq!(not_covered.status.code(), Some(1));
    let not_iso = run(&["compare", "--iso", "p2", "torus"]);
    assert_eq!(not_iso.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["build", "--family", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["info", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    let out = run(&["apply", "core", "--cap", "4", "torus"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_paper_all_pass() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("claims pass"));
}
