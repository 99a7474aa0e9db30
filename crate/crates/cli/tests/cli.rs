use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nchilbert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run(&["gamma", "missing.gf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.gf"));
}

#[test]
fn malformed_grammar_is_an_input_error() {
    let dir = std::env::temp_dir().join(format!("nchilbert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.gf");
    std::fs::write(&f, "terminals: x\nS -> x Q\n").unwrap();
    let o = run(&["gamma", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_example_is_an_input_error() {
    assert_eq!(run(&["verify-example", "nope"]).status.code(), Some(2));
}

#[test]
fn if_then_else_example_verifies() {
    let o = run(&["verify-example", "ifthenelse", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("series=1,1,2,3,6,10,20,35,70,126,252"),
        "{out}"
    );
    assert!(out.contains("check.series=pass"));
}

#[test]
fn gamma_reports_polynomial_series_and_certificate() {
    let o = run(&[
        "gamma",
        &path("dyck.gf"),
        "--max-deg",
        "8",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("series=1,0,1,0,2,0,5,0,14\n"), "{out}");
    assert!(out.contains("series.bound=8\n"));
    assert!(out.contains("certificate.unambiguous=true\n"));
}

#[test]
fn ambiguous_grammar_reports_counterexample() {
    let o = run(&["ambiguity", &path("ambiguous.gf"), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("certificate.unambiguous=false\n"), "{out}");
    assert!(out.contains("certificate.counterexample=a a a\n"));
}

#[test]
fn quotient_grammar_of_xstar_ystar() {
    let o = run(&["quotient-grammar", &path("xstarystar.aut")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("A2 -> eps | x A3 | y A2"), "{out}");
    assert!(out.contains("enumeration.agrees: true"));
}

#[test]
fn hilbert_series_matches_oracle_output() {
    let h = stdout(&run(&[
        "hilbert",
        &path("countex.spec"),
        "--max-deg",
        "8",
        "--format",
        "structured",
    ]));
    let o = stdout(&run(&[
        "oracle",
        &path("countex.pres"),
        "--max-deg",
        "8",
        "--format",
        "structured",
    ]));
    let series = |s: &str| {
        s.lines()
            .find(|l| l.starts_with("series="))
            .map(str::to_owned)
    };
    assert!(series(&h).is_some());
    assert_eq!(series(&h), series(&o));
}

#[test]
fn structured_output_is_stable() {
    let args = [
        "gsb",
        &path("fpex.pres"),
        "--max-deg",
        "6",
        "--format",
        "structured",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn resource_cap_exit_code() {
    let o = run(&[
        "gsb",
        &path("fpex.pres"),
        "--max-deg",
        "8",
        "--max-basis",
        "2",
    ]);
    assert_eq!(
        o.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn failed_prediction_is_a_mismatch() {
    let o = run(&[
        "gsb",
        &path("fpex.pres"),
        "--max-deg",
        "6",
        "--finite",
        &path("fpex-finite.lang"),
    ]);
    assert_eq!(
        o.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}
