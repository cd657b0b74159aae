//! Command line: `poly`, `enumerate` and `verify`.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error (unknown
//! names, orders beyond the guard).

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::checks::{self, CaseResult, Check, CheckParams};
use crate::grammar::FamilyKind;
use crate::stability::{SamplerConfig, Specialization};
use crate::structures::{coefficient_table, enumerate, enumeration_polynomial, table_to_csv, Statistic, StructureFamily};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "stablegram", version, about = "Stirling-permutation grammars and stability checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Raise the order guard.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a family polynomial as canonical JSON.
    Poly {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Via::Grammar)]
        via: Via,
        /// Apply a univariate specialization (A, B, C, M, S or T).
        #[arg(long)]
        specialize: Option<String>,
    },
    /// List the words of a family, or tabulate statistics over them.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<u32>,
        /// Comma-separated statistics (asc, des, plat, jplatN, bdes, blocks).
        #[arg(long, value_delimiter = ',')]
        stats: Vec<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run named checks.
    Verify {
        /// Check name, repeatable; `all` runs every check.
        #[arg(long, required = true)]
        check: Vec<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, env = "STABLEGRAM_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        re_bound: i64,
        #[arg(long, default_value_t = 10)]
        im_bound: i64,
        #[arg(long, default_value_t = 64)]
        max_denominator: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall-clock milliseconds per check.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Grammar,
    Enumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Largest order accepted without `--max-n`.
pub fn order_bound(family: StructureFamily) -> usize {
    match family {
        StructureFamily::Partition => 10,
        StructureFamily::Permutation => 8,
        StructureFamily::Stirling => 7,
        StructureFamily::MarkedStirling => 6,
        StructureFamily::Legendre => 4,
        StructureFamily::RStirling(r) => {
            // largest n with ∏_{i<n} (r·i + 1) ≤ 250000
            let mut count = 1u64;
            let mut n = 0;
            while count * (r as u64 * n as u64 + 1) <= 250_000 {
                count *= r as u64 * n as u64 + 1;
                n += 1;
            }
            n
        }
    }
}

fn guard(family: StructureFamily, n: usize, max_n: Option<usize>) -> Result<(), Error> {
    let bound = max_n.unwrap_or_else(|| order_bound(family));
    if n > bound {
        return Err(Error::OutOfBounds { what: family.name(), n, bound });
    }
    Ok(())
}

/// The result of a command: text to print and whether it succeeded.
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

fn ok(output: String) -> Outcome {
    Outcome { output, success: true }
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn cmd_poly(kind: &str, n: usize, via: Via, specialize: Option<&str>, max_n: Option<usize>) -> Result<Outcome, Error> {
    let kind: FamilyKind = kind.parse()?;
    guard(kind.structure(), n, max_n)?;
    let p = match via {
        Via::Grammar => kind.iterate(n),
        Via::Enumeration => enumeration_polynomial(kind, n),
    };
    let p = match specialize {
        Some(s) => s.parse::<Specialization>()?.apply(&p),
        None => p,
    };
    Ok(ok(p.to_json() + "\n"))
}

fn cmd_enumerate(
    family: &str,
    n: usize,
    r: Option<u32>,
    stats: &[String],
    format: Option<Format>,
    max_n: Option<usize>,
) -> Result<Outcome, Error> {
    let family = StructureFamily::parse(family, r)?;
    guard(family, n, max_n)?;
    if !stats.is_empty() {
        let stats: Vec<Statistic> = stats.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
        let table = coefficient_table(family, n, &stats)?;
        return Ok(ok(match format.unwrap_or(Format::Csv) {
            Format::Csv | Format::Text => table_to_csv(&stats, &table),
            Format::Json => {
                let rows: Vec<_> = table.iter().map(|(k, c)| json!({ "key": k, "count": c })).collect();
                json!({ "stats": stats.iter().map(ToString::to_string).collect::<Vec<_>>(), "rows": rows }).to_string()
                    + "\n"
            }
        }));
    }
    let words = enumerate(family, n);
    Ok(ok(match format.unwrap_or(Format::Text) {
        Format::Text | Format::Csv => lines(words.iter().map(ToString::to_string)),
        Format::Json => json!(words.iter().map(ToString::to_string).collect::<Vec<_>>()).to_string() + "\n",
    }))
}

/// Bound check for `verify`: the orders a check would touch for `family`.
fn guard_verify(checks: &[Check], params: &CheckParams, max_n: Option<usize>) -> Result<(), Error> {
    let Some(n) = params.n else { return Ok(()) };
    for &c in checks {
        let family = match (c, &params.family) {
            (Check::Sturm, Some(f)) => Some(f.parse::<Specialization>()?.source().structure()),
            (Check::Oracle | Check::Multiaffine, Some(f)) => Some(checks::parse_kind(f)?.structure()),
            (Check::TnIdentity | Check::Symmetry | Check::Equidistribution, _) => Some(StructureFamily::Stirling),
            (Check::Divisibility, _) => Some(StructureFamily::Legendre),
            (Check::LemmaGate, _) => {
                let bound = max_n.unwrap_or(4);
                if n > bound {
                    return Err(Error::OutOfBounds { what: "lemma-gate".into(), n, bound });
                }
                None
            }
            _ => None,
        };
        if let Some(f) = family {
            guard(f, n, max_n)?;
        }
    }
    Ok(())
}

fn render_report(results: &[CaseResult], format: Format) -> String {
    let passed = results.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            let report = json!({ "passed": passed, "cases": results });
            serde_json::to_string_pretty(&report).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(["check", "case", "passed"]).expect("in-memory write");
            for r in results {
                w.write_record([r.check.as_str(), r.case.as_str(), if r.passed { "true" } else { "false" }])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("UTF-8")
        }
        Format::Text => {
            let mut out = lines(results.iter().map(|r| {
                let mark = if r.passed { "PASS" } else { "FAIL" };
                match r.elapsed_ms {
                    Some(ms) => format!("{mark} {} {} ({ms} ms)", r.check, r.case),
                    None => format!("{mark} {} {}", r.check, r.case),
                }
            }));
            out.push_str(if passed { "all passed\n" } else { "FAILED\n" });
            out
        }
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Poly { kind, n, via, specialize } => cmd_poly(kind, *n, *via, specialize.as_deref(), cli.max_n),
        Command::Enumerate { family, n, r, stats, format } => cmd_enumerate(family, *n, *r, stats, *format, cli.max_n),
        Command::Verify { check, family, n, samples, seed, re_bound, im_bound, max_denominator, format, timings } => {
            let selected: Vec<Check> = if check.iter().any(|c| c == "all") {
                Check::ALL.to_vec()
            } else {
                check.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
            };
            let sampler = SamplerConfig {
                samples: *samples,
                seed: *seed,
                re_bound: *re_bound,
                im_bound: *im_bound,
                max_denominator: *max_denominator,
                ..SamplerConfig::default()
            };
            if *re_bound < 0 || *im_bound < 1 || *max_denominator < 1 {
                return Err(Error::Unsupported("sample bounds must be positive".into()));
            }
            let params = CheckParams { family: family.clone(), n: *n, sampler };
            guard_verify(&selected, &params, cli.max_n)?;
            let results = checks::run_all(&selected, &params, *timings)?;
            let success = results.iter().all(|r| r.passed);
            Ok(Outcome { output: render_report(&results, *format), success })
        }
    }
}

/// Parses the process arguments, runs, writes output and maps the result to
/// an exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.output),
        None => std::io::stdout().lock().write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
