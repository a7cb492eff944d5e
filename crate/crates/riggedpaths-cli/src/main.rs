//! Command-line surface: conversion between the three representations,
//! statistics, enumeration, polynomials, and the verification harness.
//!
//! Machine output is JSON on stdout, one document per line; anything meant
//! for humans goes to stderr and only under `--verbose`. Exit codes are
//! part of the contract: 0 success, 1 a verification suite found a failing
//! check, 2 the input did not parse (clap uses 2 for usage errors too),
//! 3 the input parsed but violated a domain invariant.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use riggedpaths::identity::{
    bijection_roundtrip_check, bose_fermi_check, kr_identity_check, statistic_transport_check,
};
use riggedpaths::kkr::{kkr_insert, kkr_insert_traced, kkr_ramify, kkr_ramify_traced, TraceStep};
use riggedpaths::paths::{bosonic_polynomial, enumerate_paths};
use riggedpaths::rigged::enumerate_rcs;
use riggedpaths::tableaux::{tableau_from_word, word_from_tableau, StandardTableau};
use riggedpaths::{Error, LatticeWord, RiggedConfiguration};

#[derive(Parser)]
#[command(name = "riggedpaths", version, about = "Lattice paths, tableaux, and rigged configurations")]
struct Cli {
    /// Print human-readable progress and tables to stderr.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between representations (conversions compose through the word form).
    Convert(ConvertArgs),
    /// Statistics of one object: {H,E} for words, {p,charge} for tableaux,
    /// {momentum,vacancies,takahashi} for configurations.
    Stats(StatsArgs),
    /// Stream all objects of a sector in deterministic order.
    Enumerate(EnumerateArgs),
    /// Print the coefficient array of a sector polynomial.
    Poly(PolyArgs),
    /// Run a verification suite; exit 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Repr {
    Word,
    Tableau,
    Rc,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: Repr,
    #[arg(long, value_enum)]
    to: Repr,
    /// Level bound; required when converting to a rigged configuration.
    #[arg(long)]
    level: Option<usize>,
    /// Emit the scan's step log as JSON lines before the result.
    #[arg(long)]
    trace: bool,
    /// Inline input; "-" or absent reads standard input.
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatKind {
    Word,
    Tableau,
    Rc,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(value_enum)]
    kind: StatKind,
    /// Inline input; "-" or absent reads standard input.
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Paths,
    Rcs,
    Tableaux,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    Json,
    Count,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    kind: EnumKind,
    #[arg(long)]
    level: usize,
    #[arg(long)]
    length: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: EnumFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Bosonic,
    Fermionic,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(value_enum)]
    which: PolyKind,
    #[arg(long)]
    level: usize,
    #[arg(long)]
    length: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Bijection,
    Identity,
    Kr,
    Transport,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    level: usize,
    #[arg(long)]
    max_length: usize,
}

/// A failure with its contractual exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

/// Bad letters are a failure of the serialization format; everything else
/// the format accepts but the mathematics rejects.
impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::BadLetter { .. } => Failure::parse(err.to_string()),
            _ => Failure::domain(err.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(err: serde_json::Error) -> Self {
        Failure::parse(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Convert(args) => cmd_convert(args, cli.verbose),
        Command::Stats(args) => cmd_stats(args, cli.verbose),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Poly(args) => cmd_poly(args),
        Command::Verify(args) => cmd_verify(args, cli.verbose),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn read_input(inline: Option<String>) -> Result<String, Failure> {
    match inline {
        Some(text) if text != "-" => Ok(text),
        _ => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|err| Failure::parse(format!("reading standard input: {err}")))?;
            Ok(buffer)
        }
    }
}

fn parse_word(text: &str) -> Result<LatticeWord, Failure> {
    Ok(text.trim().parse::<LatticeWord>()?)
}

fn parse_tableau(text: &str) -> Result<StandardTableau, Failure> {
    let rows: Vec<Vec<usize>> = serde_json::from_str(text)?;
    Ok(StandardTableau::new(rows)?)
}

fn parse_rc(text: &str) -> Result<RiggedConfiguration, Failure> {
    // Serde runs the full constructor, so invariant breaks surface as data
    // errors here; tell them apart from malformed JSON by reparsing shape.
    match serde_json::from_str::<RiggedConfiguration>(text) {
        Ok(config) => Ok(config),
        Err(err) => {
            if serde_json::from_str::<serde_json::Value>(text).is_err() {
                Err(Failure::parse(err.to_string()))
            } else {
                Err(Failure::domain(err.to_string()))
            }
        }
    }
}

fn emit_trace(steps: &[TraceStep]) {
    for step in steps {
        println!(
            "{}",
            serde_json::to_string(step).expect("trace steps serialize")
        );
    }
}

fn cmd_convert(args: ConvertArgs, verbose: bool) -> Result<ExitCode, Failure> {
    let text = read_input(args.input)?;

    // Funnel the input into word form.
    let word = match args.from {
        Repr::Word => parse_word(&text)?,
        Repr::Tableau => {
            let tableau = parse_tableau(&text)?;
            LatticeWord::new(word_from_tableau(&tableau))?
        }
        Repr::Rc => {
            let config = parse_rc(&text)?;
            if args.trace {
                let (word, steps) = kkr_ramify_traced(&config)?;
                emit_trace(&steps);
                word
            } else {
                kkr_ramify(&config)?
            }
        }
    };
    if verbose {
        eprintln!("word form: {word}");
    }

    let rendered = match args.to {
        Repr::Word => serde_json::to_string(&word.to_string()).expect("strings serialize"),
        Repr::Tableau => {
            let tableau = tableau_from_word(word.letters())?;
            serde_json::to_string(&tableau).expect("tableaux serialize")
        }
        Repr::Rc => {
            let level = args.level.ok_or_else(|| {
                Failure::parse("--level is required when converting to a rigged configuration")
            })?;
            let config = if args.trace {
                let (config, steps) = kkr_insert_traced(&word, level)?;
                emit_trace(&steps);
                config
            } else {
                kkr_insert(&word, level)?
            };
            serde_json::to_string(&config).expect("configurations serialize")
        }
    };
    println!("{rendered}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(args: StatsArgs, verbose: bool) -> Result<ExitCode, Failure> {
    let text = read_input(args.input)?;
    let record = match args.kind {
        StatKind::Word => {
            let word = parse_word(&text)?;
            json!({ "H": word.energy_h(), "E": word.energy_e()? })
        }
        StatKind::Tableau => {
            let tableau = parse_tableau(&text)?;
            json!({ "p": tableau.thomas_p(), "charge": tableau.charge() })
        }
        StatKind::Rc => {
            let config = parse_rc(&text)?;
            json!({
                "momentum": config.momentum()?,
                "vacancies": config.content().vacancies(config.size()),
                "takahashi": config.takahashi()?,
            })
        }
    };
    if verbose {
        let table = record.as_object().expect("stats records are objects");
        for (key, value) in table {
            eprintln!("{key:>10}  {value}");
        }
    }
    println!("{record}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, Failure> {
    match (args.kind, args.format) {
        (EnumKind::Paths, EnumFormat::Count) => {
            println!("{}", enumerate_paths(args.level, args.length).len());
        }
        (EnumKind::Paths, EnumFormat::Json) => {
            for word in enumerate_paths(args.level, args.length) {
                println!(
                    "{}",
                    serde_json::to_string(&word.to_string()).expect("strings serialize")
                );
            }
        }
        (EnumKind::Rcs, EnumFormat::Count) => {
            println!("{}", enumerate_rcs(args.level, args.length).len());
        }
        (EnumKind::Rcs, EnumFormat::Json) => {
            for config in enumerate_rcs(args.level, args.length) {
                println!(
                    "{}",
                    serde_json::to_string(&config).expect("configurations serialize")
                );
            }
        }
        (EnumKind::Tableaux, format) => {
            let words = enumerate_paths(args.level, args.length);
            match format {
                EnumFormat::Count => println!("{}", words.len()),
                EnumFormat::Json => {
                    for word in words {
                        let tableau =
                            tableau_from_word(word.letters()).expect("paths are lattice words");
                        println!(
                            "{}",
                            serde_json::to_string(&tableau).expect("tableaux serialize")
                        );
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_poly(args: PolyArgs) -> Result<ExitCode, Failure> {
    let poly = match args.which {
        PolyKind::Bosonic => {
            if args.length % 2 != 0 {
                return Err(Failure::domain(Error::OddLength(args.length).to_string()));
            }
            bosonic_polynomial(args.level, args.length)
        }
        PolyKind::Fermionic => riggedpaths::identity::fermionic_polynomial(args.level, args.length)?,
    };
    println!(
        "{}",
        serde_json::to_string(&poly).expect("polynomials serialize")
    );
    Ok(ExitCode::SUCCESS)
}

fn even_lengths(max_length: usize) -> Vec<usize> {
    (0..=max_length).step_by(2).collect()
}

fn cmd_verify(args: VerifyArgs, verbose: bool) -> Result<ExitCode, Failure> {
    let mut all_pass = true;
    let suites: &[Suite] = match args.suite {
        Suite::All => &[Suite::Bijection, Suite::Transport, Suite::Identity, Suite::Kr],
        Suite::Bijection => &[Suite::Bijection],
        Suite::Identity => &[Suite::Identity],
        Suite::Kr => &[Suite::Kr],
        Suite::Transport => &[Suite::Transport],
    };
    for &suite in suites {
        let pass = match suite {
            Suite::Bijection => {
                run_boolean_suite("bijection", &args, verbose, |level, length| {
                    bijection_roundtrip_check(level, length)
                })
            }
            Suite::Transport => {
                run_boolean_suite("transport", &args, verbose, |level, length| {
                    statistic_transport_check(level, length)
                })
            }
            Suite::Identity => {
                // Cells are independent; order is restored on collect.
                let reports: Result<Vec<_>, Error> = even_lengths(args.max_length)
                    .into_par_iter()
                    .map(|length| bose_fermi_check(args.level, length))
                    .collect();
                let reports = reports?;
                let mut pass = true;
                for report in reports {
                    if verbose {
                        eprintln!(
                            "identity level {} length {:>2}: {}",
                            report.level,
                            report.length,
                            if report.equal { "equal" } else { "MISMATCH" }
                        );
                    }
                    pass &= report.equal;
                    println!(
                        "{}",
                        serde_json::to_string(&report).expect("reports serialize")
                    );
                }
                pass
            }
            Suite::Kr => {
                let mut shapes = Vec::new();
                for length in 0..=args.max_length {
                    for lambda2 in 0..=length / 2 {
                        shapes.push((length - lambda2, lambda2));
                    }
                }
                let reports: Result<Vec<_>, Error> = shapes
                    .into_par_iter()
                    .map(|lambda| kr_identity_check(lambda, lambda.1.max(1)))
                    .collect();
                let mut pass = true;
                for report in reports? {
                    if verbose {
                        eprintln!(
                            "kr shape ({},{}): {}",
                            report.shape.0,
                            report.shape.1,
                            if report.equal { "equal" } else { "MISMATCH" }
                        );
                    }
                    pass &= report.equal;
                    println!(
                        "{}",
                        json!({
                            "suite": "kr",
                            "shape": [report.shape.0, report.shape.1],
                            "level": report.level,
                            "pass": report.equal,
                        })
                    );
                }
                pass
            }
            Suite::All => unreachable!("expanded above"),
        };
        all_pass &= pass;
    }
    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_boolean_suite(
    name: &str,
    args: &VerifyArgs,
    verbose: bool,
    check: impl Fn(usize, usize) -> bool + Sync,
) -> bool {
    let results: Vec<(usize, bool)> = even_lengths(args.max_length)
        .into_par_iter()
        .map(|length| (length, check(args.level, length)))
        .collect();
    let mut pass = true;
    for (length, ok) in results {
        if verbose {
            eprintln!(
                "{name} level {} length {length:>2}: {}",
                args.level,
                if ok { "ok" } else { "FAILED" }
            );
        }
        pass &= ok;
        println!(
            "{}",
            json!({
                "suite": name,
                "level": args.level,
                "length": length,
                "pass": ok,
            })
        );
    }
    pass
}
