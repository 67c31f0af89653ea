use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{de::DeserializeOwned, Serialize};

use fusion_core::audit::{check_algebra, gr_report, load_category, render_table, run_audit, AuditOptions};
use fusion_core::groupoid::GroupoidSpec;
use fusion_core::gvec::Category;
use fusion_core::internal::AlgebraSpec;
use fusion_core::Error;

#[derive(Parser)]
#[command(name = "fusion-audit", version, about = "Audit groupoid-graded tensor categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Category spec (JSON)
    #[arg(long)]
    category: PathBuf,
    /// Write the JSON report here instead of standard output
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate all fifteen conditions and the structural checks
    Audit {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of seeded algebras added to the fixed corpus
        #[arg(long = "corpus", default_value_t = 6)]
        corpus: usize,
        #[arg(long, default_value_t = 32)]
        sample_objects: usize,
        #[arg(long, default_value_t = 64)]
        sample_morphisms: usize,
    },
    /// Validate one algebra and report its verdicts
    CheckAlgebra {
        #[command(flatten)]
        common: Common,
        /// Algebra spec (JSON): a generator or explicit blocks
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Grothendieck ring and the fusion/separability check
    Gr {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "corpus", default_value_t = 6)]
        corpus: usize,
    },
}

const EXIT_INPUT: u8 = 2;
const EXIT_CONSISTENCY: u8 = 3;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn category(path: &Path) -> Result<Category, Error> {
    let spec: GroupoidSpec = read_json(path)?;
    load_category(&spec)
}

/// JSON goes to `--report` when given, otherwise to standard output.
/// Returns whether it went to a file.
fn emit<T: Serialize>(value: &T, report: &Option<PathBuf>) -> Result<bool, Error> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match report {
        Some(p) => {
            std::fs::write(p, text)?;
            Ok(true)
        }
        None => {
            print!("{text}");
            Ok(false)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Audit {
            common,
            seed,
            corpus,
            sample_objects,
            sample_morphisms,
        } => {
            let cat = category(&common.category)?;
            let opts = AuditOptions {
                seed,
                corpus_size: corpus,
                sample_objects,
                sample_morphisms,
            };
            let report = run_audit(&cat, &opts)?;
            if emit(&report, &common.report)? {
                print!("{}", render_table(&report));
            }
            Ok(if report.consistency { 0 } else { EXIT_CONSISTENCY })
        }
        Command::CheckAlgebra { common, algebra } => {
            let cat = category(&common.category)?;
            let spec: AlgebraSpec = read_json(&algebra)?;
            let report = check_algebra(&cat, &spec)?;
            emit(&report, &common.report)?;
            Ok(if report.valid { 0 } else { EXIT_INPUT })
        }
        Command::Gr { common, seed, corpus } => {
            let cat = category(&common.category)?;
            let opts = AuditOptions {
                seed,
                corpus_size: corpus,
                ..AuditOptions::default()
            };
            emit(&gr_report(&cat, &opts)?, &common.report)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Consistency(_) => EXIT_CONSISTENCY,
                _ => EXIT_INPUT,
            })
        }
    }
}
