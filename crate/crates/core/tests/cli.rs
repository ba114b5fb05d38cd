use std::path::PathBuf;
use std::process::{Command, Output};

use cayleyforge::{CayleyBall, GraphExport, UnlabelledDigraph};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cayleyforge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn reduce() {
    let o = run(&["reduce", "-p", "builtin:N", "-w", "cdddcdc"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rule 3 [cdddcdc -> cdc] at position 0 -> cdc"));
    assert!(stdout(&o).ends_with("normal form: cdc\n"));

    let o = run(&["reduce", "-p", &fixture("m.txt"), "-w", "abbabba"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("with n = 2"));
    assert!(stdout(&o).ends_with("steps: 2\nnormal form: ababa\n"));
}

#[test]
fn parse_errors_exit_two() {
    let o = run(&["reduce", "-p", &fixture("bad_syntax.txt"), "-w", "ab"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["reduce", "-p", "builtin:M"]).status.code(), Some(2));
    assert_eq!(run(&["ball", "-p", "builtin:M", "-r", "x"]).status.code(), Some(2));
}

#[test]
fn confluence() {
    let o = run(&["confluence", "-p", "builtin:N"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("critical pairs: 12 (12 overlaps, 0 containments)"), "{out}");
    assert!(out.contains("overlaps resolving to xyxyx: 12/12"));
    assert!(!out.contains("bounded certificate"));

    let o = run(&["confluence", "-p", "builtin:M", "--schema-bound", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bounded certificate: schema instances checked for exponents up to 12 only"));

    let o = run(&["confluence", "-p", &fixture("nonconfluent.txt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("non-joining overlap: aba -> aa | ab; normal forms aa != a"), "{}", stdout(&o));
}

#[test]
fn ball_formats() {
    let o = run(&["ball", "-p", "builtin:M", "-r", "0", "-f", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let nodes = |s: &str| s.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    assert_eq!(nodes(&stdout(&o)), 1);
    let o = run(&["ball", "-p", "builtin:M", "-r", "2", "-f", "dot"]);
    assert_eq!(nodes(&stdout(&o)), 7);

    let o = run(&["ball", "-p", "builtin:N", "-r", "5", "-f", "json", "--side", "left", "--policy", "with-frontier"]);
    let ball = CayleyBall::from_json(&stdout(&o)).unwrap();
    assert_eq!(ball.vertices.len(), 57);
    assert!(ball.out_degrees().iter().all(|&d| d == 2));
    assert_eq!(ball.to_json(), stdout(&o));

    let o = run(&["ball", "-p", "builtin:M", "-r", "3", "-f", "json", "--unlabelled"]);
    let g = UnlabelledDigraph::from_json(&stdout(&o)).unwrap();
    assert_eq!(g.n, 15);

    let o = run(&["ball", "-p", &fixture("nonconfluent.txt"), "-r", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ball_to_file_and_find_iso() {
    let dir = tempfile::tempdir().unwrap();
    let pm = dir.path().join("m.json");
    let pn = dir.path().join("n.json");
    let pl = dir.path().join("nl.json");
    for (p, args) in [
        (&pm, ["-p", "builtin:M", "--side", "right"]),
        (&pn, ["-p", "builtin:N", "--side", "right"]),
        (&pl, ["-p", "builtin:N", "--side", "left"]),
    ] {
        let mut full = vec!["ball", "-r", "5", "-f", "json", "-o", p.to_str().unwrap()];
        full.extend_from_slice(&args);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let o = run(&["find-iso", pm.to_str().unwrap(), pn.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "verified");
    assert_eq!(v["mapping"].as_array().unwrap().len(), 57);
    assert!(v["witness"].is_null());

    let o = run(&["find-iso", pm.to_str().unwrap(), pl.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "not_isomorphic");
}

#[test]
fn verify_iso() {
    let o = run(&["verify-iso", "--radius", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("vertices: 57 <-> 57"));
    assert!(out.contains("arcs: 67 <-> 67"));
    assert_eq!(run(&["verify-iso", "--radius", "0"]).status.code(), Some(0));

    let o = run(&["verify-iso", "--radius", "3", "-f", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["explicit"]["status"], "verified");

    // a budget too small for the search is reported, not silently passed
    let o = run(&["verify-iso", "--radius", "4", "--budget", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("budget of 3 expansions exhausted"));
}

#[test]
fn truncation_test() {
    for n0 in ["2", "5"] {
        let o = run(&["truncation-test", "--n0", n0]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("irreducible under truncated system: yes"));
        assert!(stdout(&o).contains("normal form in M: aba"));
    }
    assert_eq!(run(&["truncation-test", "--n0", "1"]).status.code(), Some(2));
}

#[test]
fn left_noniso() {
    let o = run(&["left-noniso", "--max-radius", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("radius 1: 3 vs 3 vertices"));
    assert!(out.contains("first differ at radius 4"));
    let o = run(&["left-noniso", "--max-radius", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["left-noniso", "--max-radius", "6", "-f", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["separated_at"], 4);
}

#[test]
fn thread_cap_does_not_change_output() {
    let a = bin()
        .args(["ball", "-p", "builtin:N", "-r", "7", "-f", "json"])
        .env("CAYLEYFORGE_THREADS", "1")
        .output()
        .unwrap();
    let b = run(&["ball", "-p", "builtin:N", "-r", "7", "-f", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
