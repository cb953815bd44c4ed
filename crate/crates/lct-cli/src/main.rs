//! `lct`: thresholds, boundary records, covers, dual-graph systems, and
//! corpus verification from the command line. Every subcommand is a thin
//! wrapper over `lct-core`; no computation happens here.

use clap::{Parser, Subcommand, ValueEnum};
use lct_core::boundary::build_record;
use lct_core::corpus;
use lct_core::dualgraph::{
    discrepancy_system, elliptic_invariants, fundamental_cycle, klt_verdict, DualGraph,
};
use lct_core::k3cover::k3_cover;
use lct_core::polynomial::Polynomial;
use lct_core::threshold::{exceptionality_verdict, lct_candidate, standard_form, weight_search};
use lct_core::weights::{well_form, Weight};
use num::{BigRational, One};
use serde::Serialize;
use std::process::ExitCode;

const DEFAULT_SEARCH_BOUND: u32 = 30;

#[derive(Parser)]
#[command(name = "lct", version, about = "Log canonical threshold toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one weight: threshold candidate, boundary record, cover.
    Eval {
        /// Polynomial, e.g. "x^7+y^3+z^2".
        #[arg(long)]
        poly: String,
        /// Variable letters, in order.
        #[arg(long, default_value = "xyz")]
        vars: String,
        /// Comma-separated weight, e.g. "6,14,21".
        #[arg(long)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimize the threshold candidate over weights up to a bound.
    Search {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "xyz")]
        vars: String,
        /// Largest weight entry to try (falls back to LCT_MAX_WEIGHT, then 30).
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a three-variable singularity: log canonical, exceptional,
    /// or non-exceptional.
    Verdict {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "xyz")]
        vars: String,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Operate on a resolution dual graph stored as JSON.
    Graph {
        /// Path to the graph file.
        #[arg(long)]
        file: String,
        #[arg(long, value_enum)]
        op: GraphOp,
        #[arg(long)]
        json: bool,
    },
    /// Work with row corpora.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOp {
    FundamentalCycle,
    Invariants,
    Discrepancy,
    Klt,
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Recompute every cell of every row and report mismatches.
    Verify {
        /// Corpus file; the bundled tables are used when omitted.
        #[arg(long)]
        file: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

/// Exit 1: the computation itself failed or found failures.
/// Exit 2: the input could not be read or parsed.
fn exit_code_for(err: &lct_core::Error) -> u8 {
    use lct_core::Error::*;
    match err {
        Parse { .. } | InvalidVariables(_) | InvalidWeight(_) | WeightLengthMismatch { .. }
        | Json(_) | InvalidGraph(_) | CorpusSchema { .. } => 2,
        _ => 1,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<lct_core::Error> for Failure {
    fn from(err: lct_core::Error) -> Self {
        Failure {
            code: exit_code_for(&err),
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Eval {
            poly,
            vars,
            weight,
            json,
        } => eval(&poly, &vars, &weight, json),
        Command::Search {
            poly,
            vars,
            max_weight,
            json,
        } => search(&poly, &vars, search_bound(max_weight), json),
        Command::Verdict {
            poly,
            vars,
            max_weight,
            json,
        } => verdict(&poly, &vars, search_bound(max_weight), json),
        Command::Graph { file, op, json } => graph(&file, op, json),
        Command::Corpus {
            action: CorpusAction::Verify { file, json },
        } => corpus_verify(file.as_deref(), json),
    }
}

fn search_bound(flag: Option<u32>) -> u32 {
    flag.or_else(|| {
        std::env::var("LCT_MAX_WEIGHT")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_SEARCH_BOUND)
}

fn upper_bound_note(candidate: &BigRational) -> Option<&'static str> {
    (*candidate > BigRational::one())
        .then_some("upper bound only (> 1: the pair is log canonical at t = 1)")
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EvalOutput {
    threshold: lct_core::threshold::ThresholdReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    record: Option<lct_core::boundary::LogEnriquesRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover: Option<lct_core::k3cover::K3CoverRecord>,
}

fn eval(poly: &str, vars: &str, weight: &str, json: bool) -> Result<(), Failure> {
    let f = Polynomial::parse(poly, vars)?;
    let w = Weight::parse(weight)?;
    let threshold = lct_candidate(&f, &w)?;
    let note = upper_bound_note(&threshold.candidate);

    let mut record = None;
    let mut cover = None;
    let mut record_error = None;
    if f.arity() == 3 {
        match build_record(&f, &w) {
            Ok(built) => {
                record = Some(built);
                if standard_form(&threshold.candidate).ok().flatten().is_some() {
                    cover = Some(k3_cover(&f, &w)?);
                }
            }
            Err(e) => record_error = Some(e),
        }
    }

    if json {
        let out = EvalOutput {
            threshold,
            note,
            record,
            cover,
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        return match record_error {
            None => Ok(()),
            Some(e) => Err(e.into()),
        };
    }

    println!("f = {f}");
    println!("w = {w}, ord_w(f) = {}", threshold.order);
    println!("candidate c = {}", threshold.candidate);
    if let Some(note) = note {
        println!("note: {note}");
    }
    println!(
        "discrepancy of the weighted blowup divisor: a(t) = {} - {}t",
        threshold.intercept,
        -&threshold.slope
    );
    if let Some(e) = record_error {
        return Err(e.into());
    }
    if let Some(record) = &record {
        let plane = well_form(&w)?;
        println!("plane: {plane}");
        println!(
            "delta = ({}, {}, {})",
            record.delta[0], record.delta[1], record.delta[2]
        );
        println!(
            "residual curve: {} (degree {})",
            record.ell, record.residual_degree
        );
        println!("balance defect: {}", record.balance_defect);
        for warning in &record.warnings {
            println!("warning: {warning}");
        }
        match &cover {
            Some(cover) => println!(
                "cover: {} with weights {} of degree {}",
                cover.cover, cover.weight4, cover.degree
            ),
            None => println!("cover: none (c is not of the form 1 - 1/m)"),
        }
    }
    Ok(())
}

fn search(poly: &str, vars: &str, bound: u32, json: bool) -> Result<(), Failure> {
    let f = Polynomial::parse(poly, vars)?;
    let outcome = weight_search(&f, bound)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcome).expect("serializable")
        );
        return Ok(());
    }
    println!(
        "minimum candidate {} at w = {} (entries up to {})",
        outcome.candidate, outcome.weight, outcome.bound
    );
    if let Some(note) = upper_bound_note(&outcome.candidate) {
        println!("note: {note}");
    }
    Ok(())
}

fn verdict(poly: &str, vars: &str, bound: u32, json: bool) -> Result<(), Failure> {
    let f = Polynomial::parse(poly, vars)?;
    let report = exceptionality_verdict(&f, bound)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
        return Ok(());
    }
    println!(
        "{:?}: threshold {} witnessed by w = {}",
        report.kind, report.threshold, report.witness
    );
    println!("{}", report.detail);
    Ok(())
}

fn graph(file: &str, op: GraphOp, json: bool) -> Result<(), Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {file}: {e}"),
    })?;
    let graph = DualGraph::from_json(&text)?;
    match op {
        GraphOp::FundamentalCycle => {
            let cycle = fundamental_cycle(&graph)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&cycle).expect("serializable")
                );
            } else {
                println!("fundamental cycle:");
                for (id, z) in cycle.ids.iter().zip(&cycle.coefficients) {
                    println!("  {id}: {z}");
                }
                println!("Z^2 = {}", cycle.z_squared);
            }
        }
        GraphOp::Invariants => {
            let inv = elliptic_invariants(&graph)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&inv).expect("serializable")
                );
            } else {
                println!("Z^2 = {}", inv.cycle.z_squared);
                println!("degree -Z^2 = {}", inv.degree);
                println!("K.Z = {}", inv.canonical_pairing);
                println!("pa(Z) = {}", inv.arithmetic_genus);
            }
        }
        GraphOp::Discrepancy => {
            let system = discrepancy_system(&graph)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&system).expect("serializable")
                );
            } else {
                println!("solution r (pullback coefficients):");
                for (id, r) in system.ids.iter().zip(&system.solution) {
                    println!("  {id}: {r}");
                }
                println!("discrepancies -r:");
                for (id, d) in system.ids.iter().zip(&system.discrepancies) {
                    println!("  {id}: {d}");
                }
            }
        }
        GraphOp::Klt => {
            let system = discrepancy_system(&graph)?;
            let verdict = klt_verdict(&system);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&verdict).expect("serializable")
                );
            } else {
                use lct_core::dualgraph::KltVerdict;
                println!(
                    "{}",
                    match verdict {
                        KltVerdict::Klt => "klt",
                        KltVerdict::LcNotKlt => "log canonical, not klt",
                        KltVerdict::NotLc => "not log canonical",
                    }
                );
            }
        }
    }
    Ok(())
}

fn corpus_verify(file: Option<&str>, json: bool) -> Result<(), Failure> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("cannot read {path}: {e}"),
        })?,
        None => corpus::shipped_tables_json().to_string(),
    };
    let rows = corpus::load(&text)?;
    let report = corpus::verify_all(&rows);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        for row in &report.rows {
            if !row.passed() {
                println!("{row}");
            }
            for (check, message) in row.warnings() {
                println!("row {:>2} [{}] {check}: {message}", row.index, row.label);
            }
        }
        println!("{}", report.summary());
        if report.passed() {
            println!("all rows pass");
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{} corpus rows failed verification", report.fail_count()),
        })
    }
}
