//! Command-line interface: structural reports, theorem audits, corpus
//! sweeps, isoclinism verification, and liezation of algebra files.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 parse or
//! validation error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use leiblab::{
    all_pass_or_skip, build_report, der_lie, fixture, generate, oracle_der_lie, parse_algebra,
    parse_field, parse_witness, run_audit, serialize_algebra, verify_isoclinism, Algebra,
    CorpusMode, CorpusSpec, Error, Exec, FieldSpec, ReportOptions, Status, FIXTURE_NAMES,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "leiblab",
    version,
    about = "Exact invariants and theorem audits for finite-dimensional Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArg {
    /// Path to an algebra JSON file.
    input: Option<PathBuf>,
    /// Use a built-in fixture (LEF, L2c, L2a, L2a(γ), L2f, R21, R2, L3s).
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the full structural report for one algebra.
    Report {
        #[command(flatten)]
        input: InputArg,
        /// Emit stable sorted-key JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Seed for the sampled checks (falls back to $LEIBLAB_SEED, then 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Monte-Carlo sample budget for the almost-inner spaces.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Run the audit table; exits 1 unless every item passes or skips.
    Audit {
        #[command(flatten)]
        target: AuditTarget,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Generate a corpus over GF(p) and run a check across it.
    Corpus {
        #[arg(long)]
        dim: usize,
        /// Finite field, e.g. gf(3).
        #[arg(long)]
        field: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Number of algebras to generate (random mode).
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        check: CheckArg,
    },
    /// Verify an isoclinism witness between two algebra files.
    Isoclinic {
        /// Check the supplied witness (the only supported action).
        #[arg(long, required = true)]
        verify: bool,
        a: PathBuf,
        b: PathBuf,
        witness: PathBuf,
    },
    /// Print the liezation (quotient by the annihilator ideal) as JSON.
    Liezation { input: PathBuf },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AuditTarget {
    /// Path to an algebra JSON file.
    input: Option<PathBuf>,
    /// Use a built-in fixture.
    #[arg(long)]
    fixture: Option<String>,
    /// Audit every built-in fixture.
    #[arg(long)]
    all_fixtures: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    /// Compare the derivation solver with exhaustive matrix enumeration.
    DerOracle,
    /// Run the full audit table on every generated algebra.
    Theorems,
}

fn resolve_seed(cli_seed: Option<u64>) -> u64 {
    cli_seed
        .or_else(|| {
            std::env::var("LEIBLAB_SEED")
                .ok()
                .and_then(|s| s.trim().parse().ok())
        })
        .unwrap_or(0)
}

fn load_file(path: &Path) -> Result<Algebra, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

/// Loads the algebra named by a file path or fixture name, with a display
/// label for output.
fn load_input(input: &Option<PathBuf>, fixture_name: &Option<String>) -> Result<(Algebra, String), Error> {
    match (input, fixture_name) {
        (Some(path), None) => {
            let label = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok((load_file(path)?, label))
        }
        (None, Some(name)) => Ok((fixture(name)?, name.clone())),
        _ => unreachable!("clap enforces exactly one input"),
    }
}

fn print_audit_lines(label: &str, items: &[leiblab::AuditItem]) -> bool {
    println!("== {label} ==");
    for item in items {
        println!("[{}] {} — {}", item.status, item.name, item.detail);
    }
    let ok = all_pass_or_skip(items);
    let fails = items.iter().filter(|i| i.status == Status::Fail).count();
    let skips = items.iter().filter(|i| i.status == Status::Skip).count();
    println!(
        "{label}: {} ({} items, {} skipped, {} failed)",
        if ok { "ok" } else { "FAILED" },
        items.len(),
        skips,
        fails
    );
    ok
}

fn cmd_report(
    input: InputArg,
    json: bool,
    seed: Option<u64>,
    samples: Option<usize>,
) -> Result<u8, Error> {
    let (algebra, label) = load_input(&input.input, &input.fixture)?;
    let opts = ReportOptions {
        seed: resolve_seed(seed),
        samples: samples.unwrap_or(64),
    };
    let report = build_report(&algebra, &label, &opts, Exec::Auto)?;
    if json {
        print!("{}", report.to_json_string());
    } else {
        print!("{}", report.render_text());
    }
    Ok(EXIT_OK)
}

fn cmd_audit(
    target: AuditTarget,
    seed: Option<u64>,
    samples: Option<usize>,
) -> Result<u8, Error> {
    let opts = ReportOptions {
        seed: resolve_seed(seed),
        samples: samples.unwrap_or(64),
    };
    let targets: Vec<(Algebra, String)> = if target.all_fixtures {
        FIXTURE_NAMES
            .iter()
            .map(|name| Ok((fixture(name)?, name.to_string())))
            .collect::<Result<_, Error>>()?
    } else {
        vec![load_input(&target.input, &target.fixture)?]
    };
    let mut all_ok = true;
    for (algebra, label) in &targets {
        let items = run_audit(algebra, &opts, Exec::Auto)?;
        if !print_audit_lines(label, &items) {
            all_ok = false;
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_corpus(
    dim: usize,
    field: &str,
    mode: ModeArg,
    count: usize,
    seed: Option<u64>,
    check: CheckArg,
) -> Result<u8, Error> {
    let p = match parse_field(field)? {
        FieldSpec::Gf(p) => p,
        FieldSpec::Rational => {
            return Err(Error::ParseError(
                "corpus generation requires a finite field, e.g. --field gf(3)".into(),
            ))
        }
    };
    let seed = resolve_seed(seed);
    let spec = CorpusSpec {
        dim,
        p,
        mode: match mode {
            ModeArg::Exhaustive => CorpusMode::Exhaustive,
            ModeArg::Random => CorpusMode::Random,
        },
        count,
        seed,
    };
    let (algebras, stats) = generate(&spec, Exec::Auto)?;
    println!(
        "corpus: {} algebras over gf({p}), dim {dim} ({} candidates tried)",
        algebras.len(),
        stats.tried
    );
    let mut failures = 0usize;
    match check {
        CheckArg::DerOracle => {
            for (idx, a) in algebras.iter().enumerate() {
                let solver = der_lie(a);
                let oracle = oracle_der_lie(a, Exec::Auto)?;
                if solver.space() != oracle.space() {
                    failures += 1;
                    println!(
                        "[fail] algebra #{idx}: solver dim {} != oracle dim {}",
                        solver.dim(),
                        oracle.dim()
                    );
                }
            }
            println!(
                "der-oracle: {} checked, {failures} mismatches",
                algebras.len()
            );
        }
        CheckArg::Theorems => {
            let opts = ReportOptions { seed, samples: 64 };
            for (idx, a) in algebras.iter().enumerate() {
                let items = run_audit(a, &opts, Exec::Auto)?;
                if !all_pass_or_skip(&items) {
                    failures += 1;
                    println!("[fail] algebra #{idx}:");
                    for item in items.iter().filter(|i| i.status == Status::Fail) {
                        println!("    {} — {}", item.name, item.detail);
                    }
                }
            }
            println!("theorems: {} audited, {failures} failures", algebras.len());
        }
    }
    Ok(if failures == 0 {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_isoclinic(a: &Path, b: &Path, witness: &Path) -> Result<u8, Error> {
    let alg_a = load_file(a)?;
    let alg_b = load_file(b)?;
    let text = std::fs::read_to_string(witness)
        .map_err(|e| Error::ParseError(format!("{}: {e}", witness.display())))?;
    let w = parse_witness(alg_a.field(), &text)?;
    if verify_isoclinism(&alg_a, &alg_b, &w)? {
        println!("isoclinic: witness verified");
        Ok(EXIT_OK)
    } else {
        println!("isoclinic: witness rejected");
        Ok(EXIT_CHECK_FAILED)
    }
}

fn cmd_liezation(input: &Path) -> Result<u8, Error> {
    let algebra = load_file(input)?;
    let (quotient, _) = algebra.liezation();
    println!("{}", serialize_algebra(&quotient));
    Ok(EXIT_OK)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Report {
            input,
            json,
            seed,
            samples,
        } => cmd_report(input, json, seed, samples),
        Cmd::Audit {
            target,
            seed,
            samples,
        } => cmd_audit(target, seed, samples),
        Cmd::Corpus {
            dim,
            field,
            mode,
            count,
            seed,
            check,
        } => cmd_corpus(dim, &field, mode, count, seed, check),
        Cmd::Isoclinic {
            verify: _,
            a,
            b,
            witness,
        } => cmd_isoclinic(&a, &b, &witness),
        Cmd::Liezation { input } => cmd_liezation(&input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID_INPUT)
        }
    }
}
