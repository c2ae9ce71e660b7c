//! End-to-end tests of the installed binary: exit codes, output stability,
//! and the documented invocation forms.

use leiblab::{fixture, parse_algebra, serialize_algebra};
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_leiblab"));
    // Isolate from any ambient seed so tests control it explicitly.
    cmd.env_remove("LEIBLAB_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_fixture_file(dir: &tempfile::TempDir, name: &str, fixture_name: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, serialize_algebra(&fixture(fixture_name).unwrap())).unwrap();
    path
}

#[test]
fn report_json_is_byte_identical_across_runs() {
    let a = run(&["report", "--fixture", "R2", "--json", "--seed", "7"]);
    let b = run(&["report", "--fixture", "R2", "--json", "--seed", "7"]);
    assert_eq!(code_of(&a), 0);
    assert_eq!(code_of(&b), 0);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_env_var_is_equivalent_to_the_flag() {
    let flagged = run(&["report", "--fixture", "R2", "--json", "--seed", "7"]);
    let via_env = bin()
        .args(["report", "--fixture", "R2", "--json"])
        .env("LEIBLAB_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(flagged.stdout, via_env.stdout);
    // An explicit flag wins over the environment.
    let both = bin()
        .args(["report", "--fixture", "R2", "--json", "--seed", "7"])
        .env("LEIBLAB_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(flagged.stdout, both.stdout);
}

#[test]
fn report_json_carries_schema_and_exact_dims() {
    let out = run(&["report", "--fixture", "L2c", "--json"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("\"z_lie_dim\": 1"));
    assert!(text.contains("\"schema\": 1"));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["dim"], 3);
    assert_eq!(doc["stem"], true);
    assert_eq!(doc["der_c_certainty"]["mode"], "monte_carlo");
    assert_eq!(doc["field"], "rational");
}

#[test]
fn report_text_mode_and_parametrized_fixture() {
    let out = run(&["report", "--fixture", "L2a(2/3)"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("dim"));
    assert!(text.contains("audit:"));
}

#[test]
fn audit_all_fixtures_is_clean() {
    let out = run(&["audit", "--all-fixtures"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    for name in leiblab::FIXTURE_NAMES {
        assert!(text.contains(&format!("== {name} ==")), "missing {name}");
        assert!(text.contains(&format!("{name}: ok")), "{name} not ok");
    }
    assert!(!text.contains("FAILED"));
}

#[test]
fn corpus_exhaustive_oracle_check_is_clean() {
    let out = run(&[
        "corpus",
        "--dim",
        "2",
        "--field",
        "gf(3)",
        "--mode",
        "exhaustive",
        "--check",
        "der-oracle",
    ]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("corpus: 41 algebras over gf(3)"));
    assert!(text.contains("der-oracle: 41 checked, 0 mismatches"));
}

#[test]
fn corpus_random_theorem_check_is_clean() {
    let out = run(&[
        "corpus",
        "--dim",
        "2",
        "--field",
        "gf(5)",
        "--mode",
        "random",
        "--count",
        "8",
        "--seed",
        "3",
        "--check",
        "theorems",
    ]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("theorems: 8 audited, 0 failures"));
}

#[test]
fn corpus_over_the_rationals_is_invalid_input() {
    let out = run(&[
        "corpus",
        "--dim",
        "2",
        "--field",
        "rational",
        "--mode",
        "exhaustive",
        "--check",
        "der-oracle",
    ]);
    assert_eq!(code_of(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn invalid_inputs_exit_3() {
    // Missing file.
    let out = run(&["report", "/nonexistent/algebra.json"]);
    assert_eq!(code_of(&out), 3);

    // Characteristic-2 field in an otherwise well-formed file.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("char2.json");
    std::fs::write(&path, r#"{"dim": 1, "field": "gf(2)"}"#).unwrap();
    let out = run(&["report", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic 2"));

    // Unknown fixture name.
    let out = run(&["audit", "--fixture", "NoSuch"]);
    assert_eq!(code_of(&out), 3);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &[] as &[&str],
        &["report"],
        &["report", "--fixture", "L2c", "--bogus"],
        &["audit", "--fixture", "L2c", "--all-fixtures"],
        &["corpus", "--dim", "2"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(code_of(&out), 2, "args {args:?}");
    }
}

#[test]
fn isoclinic_verifies_rejects_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_fixture_file(&dir, "a.json", "L2c");
    let b = write_fixture_file(&dir, "b.json", "L2c");

    // Identity witness on the 2-dimensional central quotient and the line γ2.
    let good = dir.path().join("good.json");
    std::fs::write(&good, r#"{"eta": [["1", "0"], ["0", "1"]], "xi": [["1"]]}"#).unwrap();
    let out = run(&[
        "isoclinic",
        "--verify",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        good.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("witness verified"));

    // Invertible but not compatible with the commutator tables.
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"eta": [["1", "1"], ["0", "1"]], "xi": [["1"]]}"#).unwrap();
    let out = run(&[
        "isoclinic",
        "--verify",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("witness rejected"));

    // Wrong shape: a 3×3 η cannot act on the 2-dimensional quotient.
    let misshapen = dir.path().join("shape.json");
    std::fs::write(
        &misshapen,
        r#"{"eta": [["1","0","0"],["0","1","0"],["0","0","1"]], "xi": [["1"]]}"#,
    )
    .unwrap();
    let out = run(&[
        "isoclinic",
        "--verify",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        misshapen.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 3);
}

#[test]
fn liezation_prints_the_abelianized_quotient() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture_file(&dir, "l2c.json", "L2c");
    let out = run(&["liezation", path.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    let quotient = parse_algebra(&stdout_of(&out)).unwrap();
    assert_eq!(quotient.dim(), 2);
    assert!(quotient.is_abelian());
    assert!(quotient.is_lie());
}
