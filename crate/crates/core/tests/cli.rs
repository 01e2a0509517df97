use std::path::PathBuf;

use coxeter_rigidity::catalog::{dihedral, twist_path};
use coxeter_rigidity::cli::{run, Outcome, EXIT_FAIL, EXIT_LIMIT, EXIT_OK, EXIT_USAGE};

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coxrig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn coxrig(args: &[&str]) -> Outcome {
    run(std::iter::once("coxrig").chain(args.iter().copied()))
}

fn has_line(out: &Outcome, line: &str) -> bool {
    out.stdout.lines().any(|l| l == line)
}

#[test]
fn check_reports_condition_three_failure() {
    let file = write_temp("path.cox", &twist_path().serialize());
    let out = coxrig(&["--porcelain", "check", file.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_FAIL, "{}", out.stdout);
    assert!(has_line(&out, "condition1=holds"));
    assert!(has_line(&out, "condition2=holds"));
    assert!(has_line(&out, "condition3=fails"));
}

#[test]
fn check_passes_on_odd_dihedral() {
    let file = write_temp("i2_5.cox", &dihedral(5).serialize());
    let out = coxrig(&["--porcelain", "check", file.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
}

#[test]
fn example_one_reports_reflection_counts() {
    let out = coxrig(&["--porcelain", "example1", "--k", "3"]);
    assert_eq!(out.code, EXIT_OK);
    for line in ["order_left=12", "order_right=12", "reflections_left=6", "reflections_right=4", "passed=true"] {
        assert!(has_line(&out, line), "missing {line} in\n{}", out.stdout);
    }
    assert_eq!(coxrig(&["example1", "--k", "4"]).code, EXIT_USAGE);
}

#[test]
fn example_two_verifies_the_twist() {
    let out = coxrig(&["--porcelain", "example2"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(has_line(&out, "isomorphism=verified"));
    assert!(has_line(&out, "diagrams_isomorphic=false"));
}

#[test]
fn parse_errors_are_usage_errors() {
    let file = write_temp("bad.cox", "edge a b 3\n");
    let out = coxrig(&["--porcelain", "check", file.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.starts_with("error="), "{}", out.stderr);
    assert_eq!(out.stderr.trim_end().lines().count(), 1);
    assert_eq!(coxrig(&["no-such-verb"]).code, EXIT_USAGE);
    let label = write_temp("label.cox", "vertices: a b\nedge a b 1\n");
    assert_eq!(coxrig(&["check", label.to_str().unwrap()]).code, EXIT_USAGE);
}

#[test]
fn infinite_order_hits_the_cap() {
    let file = write_temp("free.cox", "vertices: a b\n");
    let out = coxrig(&["--porcelain", "order", file.to_str().unwrap(), "a", "b", "--cap", "10"]);
    assert_eq!(out.code, EXIT_LIMIT);
    let dihedral = write_temp("i2_4.cox", &dihedral(4).serialize());
    let out = coxrig(&["--porcelain", "order", dihedral.to_str().unwrap(), "a", "b"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(has_line(&out, "order=4"), "{}", out.stdout);
}

#[test]
fn reflection_test_exit_codes() {
    let file = write_temp("i2_3.cox", &dihedral(3).serialize());
    let path = file.to_str().unwrap();
    assert_eq!(coxrig(&["is-reflection", path, "a", "b", "a"]).code, EXIT_OK);
    assert_eq!(coxrig(&["is-reflection", path, "a", "b"]).code, EXIT_FAIL);
}

#[test]
fn porcelain_output_is_deterministic() {
    let file = write_temp("det.cox", &dihedral(6).serialize());
    let path = file.to_str().unwrap();
    for args in [
        vec!["--porcelain", "lab", path],
        vec!["--porcelain", "classify", path],
        vec!["--porcelain", "example2"],
    ] {
        let (a, b) = (coxrig(&args), coxrig(&args));
        assert_eq!(a.code, b.code);
        assert_eq!(a.stdout, b.stdout);
        assert!(a.stdout.lines().all(|l| l.contains('=')), "{}", a.stdout);
    }
}
