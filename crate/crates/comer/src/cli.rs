//! Command-line front end. All logic lives in the library modules; this file
//! is flag parsing, dispatch, and output plumbing.
//!
//! Exit codes: 0 on success, 1 for validation/usage errors, 2 when an
//! internal invariant is violated (an oracle mismatch or a partial cover —
//! things that mean the code, not the input, is wrong).

use clap::{Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use crate::bench::{self, Algorithm, BenchOptions};
use crate::cosets::make_parameters;
use crate::error::Error;
use crate::report::{analyze, to_json_array};
use crate::search::{search_primes, StructureFilter};
use crate::verify::verify_range;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "comer",
    version,
    about = "Cycle structure of cyclic-group relation algebras over Z/pZ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every cycle of one instance and report its structure
    Analyze {
        /// Prime modulus
        #[arg(long)]
        p: u64,
        /// Class count; must divide p - 1
        #[arg(long)]
        n: usize,
        /// Primitive root override (defaults to the smallest root)
        #[arg(long)]
        g: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Cross-check the fast classifiers against the quadratic oracle
    Verify {
        #[arg(long, default_value_t = 3)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
        /// Largest class count tried per prime
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Scan primes p = 1 (mod n) for structural properties
    Search {
        /// Class count shared by all scanned instances
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
        #[arg(long, value_enum, default_value_t = StructureFilter::None)]
        filter: StructureFilter,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Time the classifiers over a prime ladder and emit plot-ready CSV
    Bench {
        #[arg(long, default_value_t = 23)]
        n: usize,
        #[arg(long)]
        p_max: u64,
        /// Comma-separated subset of {naive, fast}
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_values_t = [Algorithm::Naive, Algorithm::Fast]
        )]
        algorithms: Vec<Algorithm>,
        /// Timing samples per prime; the minimum is kept
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        repetitions: u32,
        /// CSV output path; omitted, the CSV streams to stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders --help/--version through the error path too; those
            // exit 0, real usage errors exit 1
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(if err.is_invariant_violation() { 2 } else { 1 })
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze { p, n, g, format } => cmd_analyze(p, n, g, format),
        Command::Verify { p_min, p_max, n_max } => cmd_verify(p_min, p_max, n_max),
        Command::Search { n, p_min, p_max, filter, format } => {
            cmd_search(n, p_min, p_max, filter, format)
        }
        Command::Bench { n, p_max, algorithms, repetitions, out } => {
            cmd_bench(n, p_max, algorithms, repetitions, out)
        }
    }
}

fn cmd_analyze(
    p: u64,
    n: usize,
    g: Option<u64>,
    format: OutputFormat,
) -> Result<ExitCode, Error> {
    let report = analyze(make_parameters(p, n, g)?);
    match format {
        OutputFormat::Text => print!("{}", report.to_text()),
        OutputFormat::Json => println!("{}", report.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(p_min: u64, p_max: u64, n_max: usize) -> Result<ExitCode, Error> {
    let report = verify_range(p_min, p_max, n_max)?;
    println!(
        "checked {} instances across {} primes ({} <= p <= {}, n <= {})",
        report.instances, report.primes, p_min, p_max, n_max
    );
    for mm in &report.mismatches {
        println!(
            "mismatch: p={} n={} cell=({},{}) naive={} fast={}",
            mm.p, mm.n, mm.i, mm.j, mm.naive, mm.fast
        );
    }
    println!("mismatches: {}", report.mismatches.len());
    Ok(if report.mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_search(
    n: usize,
    p_min: u64,
    p_max: u64,
    filter: StructureFilter,
    format: OutputFormat,
) -> Result<ExitCode, Error> {
    let reports = search_primes(n, p_min, p_max, filter)?;
    match format {
        OutputFormat::Text => {
            for r in &reports {
                println!(
                    "p={} n={} k={} g={} symmetric={} ramsey={} all_flexible={} forbidden={}",
                    r.params.p,
                    r.params.n,
                    r.params.k,
                    r.params.g,
                    r.params.symmetric,
                    r.ramsey,
                    r.all_flexible,
                    r.forbidden.len()
                );
            }
        }
        OutputFormat::Json => println!("{}", to_json_array(&reports)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(
    n: usize,
    p_max: u64,
    algorithms: Vec<Algorithm>,
    repetitions: u32,
    out: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let options = BenchOptions {
        n,
        p_max,
        algorithms,
        repetitions,
    };
    let records = bench::run(&options)?;
    match &out {
        Some(path) => {
            let file = File::create(path)?;
            bench::write_csv(BufWriter::new(file), &records)?;
            println!("wrote {} records to {}", records.len(), path.display());
        }
        None => {
            bench::write_csv(io::stdout().lock(), &records)?;
        }
    }
    for &algorithm in &options.algorithms {
        let line = match bench::fitted_slope(&records, algorithm) {
            Some(slope) => format!("fitted log-log slope {algorithm}: {slope:.3}"),
            None => format!("fitted log-log slope {algorithm}: insufficient data"),
        };
        // keep piped CSV clean: slopes go to stderr when the CSV owns stdout
        if out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
