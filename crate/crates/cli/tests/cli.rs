use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn tmp(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_TARGET_TMPDIR"), name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colalg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn validate_accepts_the_fixture() {
    let o = run(&["validate", &fixture("worked_example.alg")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dimension 3"), "{}", stdout(&o));
}

#[test]
fn check_passes_on_the_example_and_reports_the_broken_fixture() {
    let ok = run(&["check", &fixture("worked_example.alg"), "--identity", "LEIBNIZ2"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("checked 27"), "{}", stdout(&ok));
    let bad = run(&["check", &fixture("broken.alg"), "--identity", "LEIBNIZ2"]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("(e2, e2, e2)"), "{}", stdout(&bad));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(
        code(&run(&["check", &fixture("worked_example.alg"), "--identity", "NOPE"])),
        2
    );
    assert_eq!(code(&run(&["validate", &tmp("missing.alg")])), 2);
    assert_eq!(code(&run(&["validate", &fixture("worked_example.alg"), "--bogus"])), 2);
    assert_eq!(
        code(&run(&[
            "search",
            &fixture("worked_example.alg"),
            "--predicate",
            "CENTROID2",
            "--prime",
            "2"
        ])),
        2
    );
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn construct_then_check_the_output() {
    let ternary = tmp("lie_ternary.alg");
    let o = run(&[
        "construct",
        "--recipe",
        "derive_ternary",
        "--in",
        &fixture("nonabelian_lie.alg"),
        "--out",
        &ternary,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&run(&["check", &ternary, "--identity", "TERNARY_LEIBNIZ"])), 0);
    let binary = tmp("contracted.alg");
    let o = run(&[
        "construct",
        "--recipe",
        "contract",
        "--param",
        "xi=e1",
        "--in",
        &ternary,
        "--out",
        &binary,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&run(&["check", &binary, "--identity", "LEIBNIZ2"])), 0);
    let broken = run(&[
        "construct",
        "--recipe",
        "derive_ternary",
        "--in",
        &fixture("broken.alg"),
        "--out",
        &tmp("never.alg"),
    ]);
    assert_eq!(code(&broken), 2);
    assert!(String::from_utf8_lossy(&broken.stderr).contains("precondition"));
}

#[test]
fn analyze_and_search_agree_on_the_example() {
    let a = run(&["analyze", &fixture("worked_example.alg"), "--what", "centroid2"]);
    assert_eq!(code(&a), 0);
    assert!(stdout(&a).contains("centroid dimension 3"), "{}", stdout(&a));
    let s = run(&[
        "search",
        &fixture("worked_example.alg"),
        "--predicate",
        "CENTROID2",
        "--prime",
        "3",
        "--limit",
        "2",
    ]);
    assert_eq!(code(&s), 0);
    assert!(stdout(&s).starts_with("27 of "), "{}", stdout(&s));
    let c = run(&["analyze", &fixture("worked_example.alg"), "--what", "kernel"]);
    assert!(stdout(&c).contains("Leibniz kernel"), "{}", stdout(&c));
}

#[test]
fn audit_is_byte_deterministic_and_exits_on_witnesses() {
    let (a, b) = (tmp("audit_a.json"), tmp("audit_b.json"));
    let first = run(&["audit", "--seed", "0", "--format", "machine", "--out", &a]);
    let second = run(&["audit", "--seed", "0", "--format", "machine", "--out", &b]);
    assert_eq!(code(&first), 1, "the ledger rows carry witnesses");
    assert_eq!(code(&second), 1);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(stdout(&first).contains("witnesses"));
}
