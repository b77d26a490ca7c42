//! `rankyank` — aggregate multi-criteria ordinal rankings under the simple
//! majority rule and decide what a forced-ranking policy would do.
//!
//! Exit codes: `analyze` returns 0 when nobody can be whipped, 1 when the
//! outcome separates; `check` returns 0 when a sufficient condition holds
//! and 3 otherwise; `enumerate` returns 1 if a sweep finds a counterexample;
//! input and configuration errors always return 2.

mod parse;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rankyank::{
    estimate_none_whipped_probability, verify_implications, Culture, EnumerationScope,
    SimulationConfig,
};

#[derive(Parser)]
#[command(
    name = "rankyank",
    version,
    about = "Majority-rule aggregation of ordinal rankings with a forced-ranking verdict"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Aggregate a profile file: matrices, relation, outcome, verdict
    Analyze {
        /// Profile file: `<multiplicity>: a > b = c` per line, `#` comments
        path: PathBuf,
        #[command(flatten)]
        format: FormatFlags,
    },
    /// Evaluate the sufficient conditions for a profile file
    Check {
        /// Profile file, same format as `analyze`
        path: PathBuf,
        #[command(flatten)]
        format: FormatFlags,
    },
    /// Exhaustively check every implication over all small profiles
    Enumerate {
        /// Number of alternatives (2..=5)
        #[arg(long)]
        m: usize,
        /// Number of criteria (1..=4, capped so the sweep stays desk-sized)
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: FormatFlags,
    },
    /// Monte Carlo estimate of the probability that nobody is whipped
    Simulate {
        /// Number of alternatives (2..=20)
        #[arg(long)]
        m: usize,
        /// Number of criteria
        #[arg(long)]
        n: usize,
        /// Independent trials
        #[arg(long)]
        trials: u64,
        /// RNG seed; identical seeds reproduce the estimate exactly
        #[arg(long)]
        seed: u64,
        /// Criterion distribution
        #[arg(long, value_enum)]
        culture: CultureArg,
        /// Append the estimate as a CSV row (header written to new files)
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        format: FormatFlags,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct FormatFlags {
    /// Emit compact JSON instead of text
    #[arg(long)]
    json: bool,
    /// Emit pretty-printed JSON instead of text
    #[arg(long)]
    pretty: bool,
}

enum Format {
    Text,
    Json,
    Pretty,
}

impl FormatFlags {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.pretty {
            Format::Pretty
        } else {
            Format::Text
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CultureArg {
    /// Uniform over all weak orders (ties allowed)
    Weak,
    /// Uniform over strict orders
    Strict,
}

impl From<CultureArg> for Culture {
    fn from(arg: CultureArg) -> Culture {
        match arg {
            CultureArg::Weak => Culture::UniformWeakOrders,
            CultureArg::Strict => Culture::UniformStrictOrders,
        }
    }
}

fn emit<T: Serialize>(document: &T, text: String, format: &FormatFlags) {
    match format.format() {
        Format::Text => print!("{text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string(document).expect("report documents serialize")
        ),
        Format::Pretty => println!(
            "{}",
            serde_json::to_string_pretty(document).expect("report documents serialize")
        ),
    }
}

fn load_profile(path: &Path) -> Result<rankyank::Profile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse::parse_profile(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn append_csv(path: &Path, doc: &report::EstimateDocument) -> Result<(), String> {
    let needs_header = fs::metadata(path).map(|meta| meta.len() == 0).unwrap_or(true);
    let mut file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let mut write = |line: String| {
        writeln!(file, "{line}").map_err(|e| format!("{}: {e}", path.display()))
    };
    if needs_header {
        write("m,n,culture,trials,seed,none_whipped,point,std_error".to_string())?;
    }
    write(format!(
        "{},{},{},{},{},{},{},{}",
        doc.m, doc.n, doc.culture, doc.trials, doc.seed, doc.none_whipped, doc.point, doc.std_error
    ))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { path, format } => {
            let profile = load_profile(&path)?;
            let document = report::build_report(&profile);
            emit(&document, report::render_report_text(&document), &format);
            Ok(if document.none_whipped {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Check { path, format } => {
            let profile = load_profile(&path)?;
            let document = report::build_condition_document(&profile);
            emit(&document, report::render_conditions_text(&document), &format);
            let sufficient =
                document.election_symmetric || document.mean_uniform || document.dual_relation;
            Ok(if sufficient {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Enumerate { m, n, format } => {
            let scope = EnumerationScope::new(m, n).map_err(|e| e.to_string())?;
            let sweep = verify_implications(&scope);
            let document = report::build_sweep_document(&sweep);
            emit(&document, report::render_sweep_text(&document), &format);
            Ok(if document.counterexamples.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Simulate {
            m,
            n,
            trials,
            seed,
            culture,
            csv,
            format,
        } => {
            let config = SimulationConfig::new(m, n, trials, seed, culture.into())
                .map_err(|e| e.to_string())?;
            let estimate = estimate_none_whipped_probability(&config);
            let document = report::build_estimate_document(&config, &estimate);
            if let Some(path) = csv {
                append_csv(&path, &document)?;
            }
            emit(&document, report::render_estimate_text(&document), &format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
