//! Thin command-line front end over the library: weight classification,
//! per-matrix isolation checks, batch runs over TSV weight lists, and
//! regeneration of the embedded fourteen-row table.
//!
//! Exit codes: 0 for a positive answer, 3 for a mathematically negative
//! answer (not exceptional / not isolated), 2 for input or operational
//! errors. Stdout carries the report only; diagnostics go to stderr.

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::exit;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{Map, Value};

use strange_duality::report;
use strange_duality::{classify, det3, isolated_at_origin, load_weight_list, IMat3, Result, Weight};

#[derive(Parser)]
#[command(
    name = "strange-dual",
    version,
    about = "Classify weight systems via unimodular factorizations B_a = CD",
    after_help = "Exit codes: 0 positive, 3 mathematically negative, 2 input/operational error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a weight system (a1, a2, a3; a1+a2+a3+1).
    Classify {
        a1: u64,
        a2: u64,
        a3: u64,
        /// JSON report envelope on stdout (the default).
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        /// One tab-separated row instead of JSON.
        #[arg(long)]
        tsv: bool,
        /// Cross-check every factorization against the Milnor engine.
        #[arg(long)]
        oracle: bool,
        /// Include all factorizations, not just the isolated classes.
        #[arg(long)]
        all_solutions: bool,
    },
    /// Classify every weight in a TSV file (`a1<TAB>a2<TAB>a3`, optional `<TAB>label`).
    Batch {
        /// Weight list; '#' starts a comment, blank lines are skipped.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        #[arg(long)]
        tsv: bool,
    },
    /// Decide whether f_C has an isolated critical point at the origin.
    CheckIsolated {
        /// The nine entries of C, row-major, non-negative.
        #[arg(num_args = 9, value_name = "ENTRY", allow_negative_numbers = true)]
        entries: Vec<i64>,
        /// Also run the Milnor engine and report agreement, μ and the
        /// Milnor–Orlik product.
        #[arg(long)]
        oracle: bool,
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        #[arg(long)]
        tsv: bool,
    },
    /// Regenerate the factorization table for the embedded 14 weights.
    Table {
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        #[arg(long)]
        tsv: bool,
    },
}

fn main() {
    // A positive STRANGE_DUAL_THREADS caps the worker count of the batch
    // and table commands; anything else in the variable is a usage error.
    if let Ok(raw) = std::env::var("STRANGE_DUAL_THREADS") {
        match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!(
                    "error: STRANGE_DUAL_THREADS must be a positive integer, got {raw:?}"
                );
                exit(2);
            }
        }
    }
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli.command, started) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            exit(2);
        }
    }
}

fn print_json(command: &str, input: Value, result: Value, started: Instant) {
    let env = report::envelope(command, input, result, started.elapsed().as_millis());
    println!(
        "{}",
        serde_json::to_string(&env).expect("envelope serializes")
    );
}

fn run(command: Command, started: Instant) -> Result<i32> {
    match command {
        Command::Classify {
            a1,
            a2,
            a3,
            tsv,
            oracle,
            all_solutions,
            ..
        } => {
            let w = Weight::new([a1, a2, a3])?;
            let r = classify(&w)?;
            if tsv {
                println!("{}", report::classification_tsv_row(&r)?);
            } else {
                let payload = report::classify_payload(&r, all_solutions, oracle)?;
                let mut input = Map::new();
                input.insert("a".into(), report::jtriple(&w.a()));
                print_json("classify", Value::Object(input), payload, started);
            }
            Ok(if r.is_exceptional { 0 } else { 3 })
        }
        Command::Batch { input, tsv, .. } => {
            let file = File::open(&input)?;
            let entries = load_weight_list(BufReader::new(file))?;
            if tsv {
                print!("{}", report::batch_tsv(&entries)?);
            } else {
                let payload = report::batch_payload(&entries)?;
                let mut echo = Map::new();
                echo.insert("file".into(), report::js(input.display()));
                print_json("batch", Value::Object(echo), payload, started);
            }
            Ok(0)
        }
        Command::CheckIsolated {
            entries,
            oracle,
            tsv,
            ..
        } => {
            if entries.iter().any(|&e| e < 0) {
                eprintln!("error: matrix entries must be non-negative");
                return Ok(2);
            }
            let c = IMat3::from_i64([
                [entries[0], entries[1], entries[2]],
                [entries[3], entries[4], entries[5]],
                [entries[6], entries[7], entries[8]],
            ]);
            if det3(&c) == num::BigInt::from(0) {
                eprintln!("error: exponent matrix is singular (det C = 0)");
                return Ok(2);
            }
            let isolated = isolated_at_origin(&c)?;
            if tsv {
                println!("{}", report::check_isolated_tsv(&c, isolated, oracle)?);
            } else {
                let payload = report::check_isolated_payload(&c, isolated, oracle)?;
                let mut echo = Map::new();
                echo.insert("c".into(), report::jmat(&c));
                print_json("check-isolated", Value::Object(echo), payload, started);
            }
            Ok(if isolated { 0 } else { 3 })
        }
        Command::Table { tsv, .. } => {
            if tsv {
                print!("{}", report::table_tsv()?);
            } else {
                let payload = report::table_payload()?;
                print_json("table", Value::Object(Map::new()), payload, started);
            }
            Ok(0)
        }
    }
}
