use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use noether_core::groups::{build_group, catalog_names, is_generalized_quaternion16, two_sylow};
use noether_core::oracle::{self, OracleSummary};
use noether_core::{verdict, FieldDescriptor, GroupSpec, Report};

/// Fixed seed for the Hilbert reciprocity sample.
const HILBERT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "noether", version, about = "Retract-rationality obstructions for k(G)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run both criteria for a group over a field.
    Check {
        /// catalog:NAME | perm:(cycles);(cycles)... | metacyclic:a=..,b=..,c=..,r=..
        #[arg(long)]
        group: String,
        /// Q | "Q(sqrt D)"
        #[arg(long)]
        field: String,
        /// Print a single-line JSON report.
        #[arg(long)]
        json: bool,
    },
    /// List the catalog groups with their 2-Sylow summaries.
    Catalog,
    /// Compare library decisions with brute-force searches.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        /// three-squares: n <= 10000; isotropy: height <= 60; hilbert: samples <= 10000
        bound: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    ThreeSquares,
    Isotropy,
    Hilbert,
}

fn check(group: &str, field: &str, json: bool) -> Result<ExitCode, String> {
    let spec: GroupSpec = group.parse().map_err(|e| format!("{e}"))?;
    let k: FieldDescriptor = field.parse().map_err(|e| format!("{e}"))?;
    let v = verdict(&spec, &k).map_err(|e| format!("{e}"))?;
    let report = Report::from(&v);
    if json {
        println!("{}", serde_json::to_string(&report).map_err(|e| e.to_string())?);
    } else {
        println!("{report}");
    }
    Ok(if report.is_decided() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn catalog() -> Result<ExitCode, String> {
    for name in catalog_names() {
        let g = build_group(&GroupSpec::catalog(&name).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let p = two_sylow(&g);
        let sylow = if p.is_whole() {
            "sylow2 = itself".to_string()
        } else {
            format!("sylow2 order {}", p.order())
        };
        let q16 = if is_generalized_quaternion16(&p) { "yes" } else { "no" };
        println!("{name}: order {}, {sylow}, Q16 = {q16}", g.order());
    }
    Ok(ExitCode::SUCCESS)
}

fn finish(summary: OracleSummary, ok_line: String) -> ExitCode {
    if summary.passed() {
        println!("{ok_line}");
        ExitCode::SUCCESS
    } else {
        for m in &summary.mismatches {
            println!("mismatch: {m}");
        }
        println!(
            "{}/{} agree",
            summary.checked - summary.mismatches.len(),
            summary.checked
        );
        ExitCode::FAILURE
    }
}

fn run_oracle(kind: OracleKind, bound: u64) -> Result<ExitCode, String> {
    let err = |e: noether_core::Error| e.to_string();
    Ok(match kind {
        OracleKind::ThreeSquares => {
            let s = oracle::check_three_squares(bound).map_err(err)?;
            let line = format!("{}/{} agree", s.checked, s.checked);
            finish(s, line)
        }
        OracleKind::Hilbert => {
            let samples = usize::try_from(bound).map_err(|e| e.to_string())?;
            let s = oracle::check_hilbert_reciprocity(samples, HILBERT_SEED).map_err(err)?;
            let line = format!("reciprocity holds on {} samples", s.checked);
            finish(s, line)
        }
        OracleKind::Isotropy => {
            let height = i64::try_from(bound).map_err(|e| e.to_string())?;
            let s = oracle::check_isotropy_grid(height).map_err(err)?;
            let line = format!("all dim ≤ 4 sample forms agree ({} forms)", s.checked);
            finish(s, line)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { group, field, json } => check(&group, &field, json),
        Command::Catalog => catalog(),
        Command::Oracle { kind, bound } => run_oracle(kind, bound),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::FAILURE
    })
}
