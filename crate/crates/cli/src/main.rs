use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod fuzz;
mod output;
mod render;

use commands::CliError;

#[derive(Parser)]
#[command(
    name = "tplactic",
    version,
    about = "Timed tableaux, Knuth equivalence and real RSK"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoChoice {
    Direct,
    Recording,
    Shadows,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Peel maximal instead of minimal support points.
    MaxLeadingPoints,
}

#[derive(Subcommand)]
enum Command {
    /// Insertion tableau P(w) of a word.
    Ptab {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        /// Include a Knuth move certificate.
        #[arg(long)]
        trace: bool,
    },
    /// Insert a row into a tableau.
    Insert {
        tableau: String,
        row: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Delete from a tableau down to a given shape.
    Delete {
        tableau: String,
        shape: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Greene invariants a_1, ..., a_k.
    Greene {
        word: String,
        #[arg(long)]
        k: Option<usize>,
        /// Also run the exhaustive oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = timed_plactic::DEFAULT_ORACLE_CAP)]
        cap: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Decide Knuth equivalence of two words.
    KnuthEqual {
        left: String,
        right: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Dump a Knuth certificate, or verify one with --replay.
    KnuthTrace {
        word: String,
        #[arg(long)]
        n: Option<usize>,
        /// JSON trace file to check instead of computing one.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Real RSK of a matrix file (CSV or JSON).
    Rsk {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgoChoice::Direct)]
        algo: AlgoChoice,
        /// Include Gelfand-Tsetlin patterns of P and Q.
        #[arg(long)]
        emit_gt: bool,
        /// Include per-algorithm wall-clock timings.
        #[arg(long)]
        timing: bool,
    },
    /// Recover the matrix from the JSON written by `rsk`.
    RskInverse { input: PathBuf },
    /// Gelfand-Tsetlin pattern of a tableau, or the tableau of a pattern.
    Gt {
        /// Tableau text; omitted when --pattern is given.
        tableau: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// JSON pattern file to convert back to a tableau.
        #[arg(long)]
        pattern: Option<PathBuf>,
    },
    /// Render a tableau (or the insertion tableau of a word) as SVG.
    Viz {
        input: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100.0)]
        pixels_per_unit: f64,
        #[arg(long, default_value_t = 30.0)]
        row_height: f64,
    },
    /// Seeded differential testing of all invariants on random matrices.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 5)]
        max_m: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        denom_bound: u64,
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Ptab { word, n, trace } => commands::ptab(&word, n, trace, format),
        Command::Insert { tableau, row, n } => commands::insert(&tableau, &row, n, format),
        Command::Delete { tableau, shape, n } => commands::delete(&tableau, &shape, n, format),
        Command::Greene {
            word,
            k,
            oracle,
            cap,
            n,
        } => commands::greene(&word, k, oracle, cap, n, format),
        Command::KnuthEqual { left, right, n } => commands::knuth_equal(&left, &right, n, format),
        Command::KnuthTrace { word, n, replay } => {
            commands::knuth_trace(&word, n, replay.as_deref(), format)
        }
        Command::Rsk {
            matrix,
            algo,
            emit_gt,
            timing,
        } => commands::rsk(&matrix, algo, emit_gt, timing, format),
        Command::RskInverse { input } => commands::rsk_inverse(&input, format),
        Command::Gt {
            tableau,
            n,
            pattern,
        } => commands::gt(tableau.as_deref(), n, pattern.as_deref(), format),
        Command::Viz {
            input,
            n,
            pixels_per_unit,
            row_height,
        } => commands::viz(&input, n, pixels_per_unit, row_height),
        Command::Fuzz {
            seed,
            cases,
            max_m,
            max_n,
            denom_bound,
            inject_fault,
        } => {
            let config = fuzz::FuzzConfig {
                seed,
                cases,
                max_m,
                max_n,
                denom_bound,
                fault: inject_fault,
            };
            fuzz::run(&config, format)
        }
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let path = cli.output.clone();
    match run(cli) {
        Ok(text) => match emit(&text, path.as_ref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => e.report(),
        },
        Err(e) => {
            if let CliError::Failure {
                report: Some(report),
                ..
            } = &e
            {
                let _ = emit(report, path.as_ref());
            }
            e.report()
        }
    }
}
