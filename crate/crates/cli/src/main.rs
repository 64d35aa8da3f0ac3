use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ecparity_cli::compute::{compute_global, compute_local, to_text};
use ecparity_cli::record::{parse_coefficients, parse_corpus};
use ecparity_cli::{run_suite, CliError, Suite, SuiteOptions};

#[derive(Parser)]
#[command(name = "ecparity", version, about = "Root numbers and parity identities for elliptic curves over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Starting p-adic digits; doubled automatically on precision loss.
    #[arg(long, default_value_t = 30, global = true)]
    precision: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one curve.
    Compute {
        #[command(subcommand)]
        what: ComputeKind,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// JSON-lines corpus replacing the suite's default inputs.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Restrict local suites to one prime.
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ComputeKind {
    /// Local invariants over Q_p.
    Local {
        /// a1,a2,a3,a4,a6
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        p: u64,
    },
    /// The global root number and its assembly.
    Global {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Squarefree r for the twist product over Q(√r).
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<i64>,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Compute { what } => {
            let v = match what {
                ComputeKind::Local { curve, p } => compute_local(parse_coefficients(&curve)?, p, cli.precision)?,
                ComputeKind::Global { curve, twist } => compute_global(parse_coefficients(&curve)?, twist)?,
            };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v).expect("value serialises")),
                Format::Text => print!("{}", to_text(&v)),
            }
            Ok(0)
        }
        Command::Verify { suite, corpus, seed, p } => {
            let corpus = match corpus {
                Some(path) => Some(parse_corpus(&std::fs::read_to_string(path)?)?),
                None => None,
            };
            let report = run_suite(suite, &SuiteOptions { seed, precision: cli.precision, corpus, prime: p })?;
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
