use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use patseq::commands::{self, Checkpoints, Method, OutputFormat};
use patseq::specfile::PatternSpecFile;
use patseq::weighted::WeightedSet;

#[derive(Parser)]
#[command(
    name = "patseq",
    version,
    about = "Generalized digit-pattern sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Substitution,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Occurrences of a word in the expansion of n.
    Count {
        #[arg(long)]
        spec: PathBuf,
        /// Digit string (base <= 10) or comma-separated digits.
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: String,
    },
    /// First terms of the sequence as exponent and complex value.
    Seq {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        len: usize,
        #[arg(long, value_enum, default_value = "substitution")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "csv")]
        out: OutArg,
    },
    /// Exact partial sums at checkpoints.
    Sums {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        nmax: u64,
        /// `pow` for powers of the base, or a comma-separated list.
        #[arg(long, default_value = "pow")]
        checkpoints: String,
        #[arg(long, value_enum, default_value = "csv")]
        out: OutArg,
    },
    /// Decide whether the Cesàro mean vanishes. Exit 0 if it does, 1 if not.
    Decide {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Cross-check all routes on one spec. Exit 1 on any mismatch.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        #[arg(long, value_enum, default_value = "csv")]
        out: OutArg,
    },
}

fn load(path: &PathBuf) -> patseq::Result<WeightedSet> {
    PatternSpecFile::load(path)?.to_weighted_set()
}

fn format(out: OutArg) -> OutputFormat {
    match out {
        OutArg::Csv => OutputFormat::Csv,
        OutArg::Json => OutputFormat::Json,
    }
}

fn run(cli: Cli) -> patseq::Result<u8> {
    match cli.command {
        Command::Count { spec, word, n } => {
            println!("{}", commands::count(&load(&spec)?, &word, &n)?);
            Ok(0)
        }
        Command::Seq {
            spec,
            len,
            method,
            out,
        } => {
            let method = match method {
                MethodArg::Direct => Method::Direct,
                MethodArg::Substitution => Method::Substitution,
            };
            print!(
                "{}",
                commands::seq_output(&load(&spec)?, len, method, format(out))?
            );
            Ok(0)
        }
        Command::Sums {
            spec,
            nmax,
            checkpoints,
            out,
        } => {
            let points: Checkpoints = checkpoints.parse()?;
            print!(
                "{}",
                commands::sums_output(&load(&spec)?, nmax, &points, format(out))?
            );
            Ok(0)
        }
        Command::Decide { spec } => {
            let d = commands::decide(&load(&spec)?)?;
            print!("{}", commands::decision_json(&d));
            Ok(if d.holds { 0 } else { 1 })
        }
        Command::Verify { spec, depth, out } => {
            let report = commands::verify(&load(&spec)?, depth)?;
            match out {
                OutArg::Csv => print!("{}", report.render()),
                OutArg::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                ),
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
