//! `zappatic`: generate presentations, certify `G^n_* ≅ S_n`, check derived
//! relators and tabulate invariants.
//!
//! Exit codes: 0 passed, 1 refuted, 2 inconclusive (coset limit), 3 usage or
//! input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zappatic_core::certify::{self, combined_outcome, Method, Outcome};
use zappatic_core::deduction::{self, SuiteReport, Verdict};
use zappatic_core::enumeration::{default_max_cosets, EnumerationOptions, Strategy, MAX_COSETS_ENV};
use zappatic_core::invariants::{self, TableFormat};
use zappatic_core::par::Execution;
use zappatic_core::presentation::{coxeter_presentation, e10_appendix_presentation, star_document};
use zappatic_core::words::Word;

const EXIT_USAGE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "zappatic", version, about = "Presentations and invariants of E_n Galois covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a presentation in relator text format.
    Present {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        stage: StageArg,
        /// Source of FULL-stage relators; only `appendix` (n = 10) exists.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Certify the quotient group against S_n.
    Verify {
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        n: Option<u32>,
        /// Inclusive range `a..b`.
        #[arg(long)]
        range: Option<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Full)]
        method: MethodArg,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that derived relators follow from the presentation.
    Deduce {
        #[arg(long)]
        n: u32,
        /// A single relator in token form, e.g. "5 9 -5 -9".
        #[arg(long, allow_hyphen_values = true)]
        relator: Option<String>,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Invariants of one degree as JSON.
    Invariants {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Invariant table over an inclusive range `a..b`.
    Table {
        #[arg(long)]
        range: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Md)]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct Limits {
    /// Coset limit per enumeration.
    #[arg(long, env = MAX_COSETS_ENV)]
    max_cosets: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Mixed)]
    strategy: StrategyArg,
}

impl Limits {
    fn options(&self) -> EnumerationOptions {
        EnumerationOptions::new(
            self.max_cosets.unwrap_or_else(default_max_cosets),
            match self.strategy {
                StrategyArg::Mixed => Strategy::Mixed,
                StrategyArg::Felsch => Strategy::Felsch,
                StrategyArg::Hlt => Strategy::Hlt,
            },
        )
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StageArg {
    Full,
    Star,
    Coxeter,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Hom,
    Order,
    Full,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Mixed,
    Felsch,
    Hlt,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Md,
    Csv,
    Json,
}

fn parse_range(s: &str) -> anyhow::Result<(u32, u32)> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .with_context(|| format!("range {s:?} is not of the form a..b"))?;
    let lo = a.trim().parse().with_context(|| format!("bad range start {a:?}"))?;
    let hi = b.trim().parse().with_context(|| format!("bad range end {b:?}"))?;
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo, hi))
}

fn emit(text: &str, output: &Option<PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(value: &T, output: &Option<PathBuf>) -> anyhow::Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    emit(&s, output)
}

fn present(n: u32, stage: StageArg, fixture: Option<&str>) -> anyhow::Result<String> {
    Ok(match stage {
        StageArg::Full => {
            match fixture {
                Some("appendix") | None => {}
                Some(other) => bail!("unknown fixture {other:?}; only \"appendix\" exists"),
            }
            if n != 10 {
                bail!("FULL-stage relators exist only for n = 10 (--fixture appendix)");
            }
            e10_appendix_presentation()?.to_text()
        }
        StageArg::Star => star_document(n)?,
        StageArg::Coxeter => coxeter_presentation(n)?.to_text(),
    })
}

#[derive(Serialize)]
struct RelatorVerdict {
    n: u32,
    #[serde(flatten)]
    report: deduction::DeductionReport,
}

fn verdict_outcome<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> Outcome {
    let vs: Vec<Verdict> = verdicts.into_iter().copied().collect();
    if vs.contains(&Verdict::NotConsequence) {
        Outcome::Refuted
    } else if vs.contains(&Verdict::Inconclusive) {
        Outcome::Inconclusive
    } else {
        Outcome::Passed
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Present {
            n,
            stage,
            fixture,
            output,
        } => {
            emit(&present(n, stage, fixture.as_deref())?, &output)?;
            Ok(Outcome::Passed)
        }
        Command::Verify {
            n,
            range,
            method,
            limits,
            output,
        } => {
            let method = match method {
                MethodArg::Hom => Method::Hom,
                MethodArg::Order => Method::Order,
                MethodArg::Full => Method::Full,
            };
            let options = limits.options();
            if let Some(n) = n {
                let cert = certify::verify(n, method, options)?;
                emit_json(&cert, &output)?;
                Ok(cert.outcome)
            } else {
                let (lo, hi) = parse_range(range.as_deref().unwrap_or_default())?;
                let ns: Vec<u32> = (lo..=hi).collect();
                let certs = certify::verify_many(&ns, method, options, Execution::default())?;
                emit_json(&certs, &output)?;
                Ok(combined_outcome(&certs))
            }
        }
        Command::Deduce {
            n,
            relator,
            limits,
            output,
        } => {
            let options = limits.options();
            match relator {
                Some(text) => {
                    let w: Word = text.parse()?;
                    let (p, _) = certify::verification_presentation(n)?;
                    let report = deduction::is_consequence(&p, &w, options)?;
                    let outcome = verdict_outcome([&report.verdict]);
                    emit_json(&RelatorVerdict { n, report }, &output)?;
                    Ok(outcome)
                }
                None => {
                    let suite: SuiteReport = deduction::deduction_suite(n, options)?;
                    let outcome = verdict_outcome(suite.reports.iter().map(|r| &r.verdict));
                    emit_json(&suite, &output)?;
                    Ok(outcome)
                }
            }
        }
        Command::Invariants { n, output } => {
            emit_json(&invariants::invariant_report(n)?, &output)?;
            Ok(Outcome::Passed)
        }
        Command::Table {
            range,
            format,
            output,
        } => {
            let (lo, hi) = parse_range(&range)?;
            let format = match format {
                FormatArg::Md => TableFormat::Markdown,
                FormatArg::Csv => TableFormat::Csv,
                FormatArg::Json => TableFormat::Json,
            };
            let mut text = invariants::emit_table(lo, hi, format)?;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            emit(&text, &output)?;
            Ok(Outcome::Passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(outcome) => ExitCode::from(outcome.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
