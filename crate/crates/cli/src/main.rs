//! `evac`: evaluate, analyse, verify and optimize cut strategies for
//! two-robot disk evacuation.

mod commands;
mod export;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "evac",
    version,
    about = "Two-robot disk evacuation with boundary cuts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    Trajectory,
    Profile,
}

#[derive(Subcommand)]
enum Command {
    /// Evacuation time and angles for a single exit position.
    Evaluate {
        /// Parameter JSON file, or `paper` for the builtin set.
        #[arg(long, default_value = "paper")]
        params: String,
        /// Arc length from I to the exit along R1's search direction.
        #[arg(
            long,
            required_unless_present = "after_cut",
            conflicts_with = "after_cut"
        )]
        exit_arc: Option<f64>,
        /// Exit at the position of cut I (1-based), found on return from the cut.
        #[arg(long, value_name = "I")]
        after_cut: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certified worst case over all exit positions.
    WorstCase {
        #[arg(long, default_value = "paper")]
        params: String,
        /// Dense-scan resolution (0 disables the scan).
        #[arg(long, default_value_t = 1_000_000)]
        grid: usize,
        /// Criterion samples per smooth piece.
        #[arg(long, default_value_t = 10_000)]
        criterion_grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Golden-value suite; exit code 1 if any check fails.
    Verify {
        #[arg(long, default_value = "paper")]
        params: String,
        #[arg(long, default_value_t = 1_000_000)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pattern search over cut parameters.
    Optimize {
        /// Seed parameter file, or `paper`.
        #[arg(long, default_value = "paper")]
        params: String,
        /// Search config JSON; missing fields take their defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Where to write the optimized parameters.
        #[arg(long)]
        out: PathBuf,
        /// Run log CSV (eval, p1, alpha1, d1, ..., objective, accepted).
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Trajectory polylines or the evacuation-time profile.
    Export {
        #[arg(long, default_value = "paper")]
        params: String,
        #[arg(long, value_enum)]
        what: ExportKind,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Sampling step in time (trajectory) or arc length (profile).
        #[arg(long, default_value_t = 1e-3)]
        resolution: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_PARAMS: u8 = 2;
pub const EXIT_SOLVER: u8 = 3;
pub const EXIT_IO: u8 = 4;

impl Failure {
    pub fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Self {
            code,
            error: error.into(),
        }
    }
}

fn init_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("EVAC_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().map_err(|_| {
        Failure::new(
            EXIT_PARAMS,
            anyhow::anyhow!("EVAC_THREADS={v:?} is not a thread count"),
        )
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::new(EXIT_SOLVER, e))
}

fn run(cli: Cli) -> Result<(), Failure> {
    init_threads()?;
    match cli.command {
        Command::Evaluate {
            params,
            exit_arc,
            after_cut,
            out,
        } => commands::evaluate(&params, exit_arc, after_cut, out.as_deref()),
        Command::WorstCase {
            params,
            grid,
            criterion_grid,
            out,
        } => commands::worst_case(&params, grid, criterion_grid, out.as_deref()),
        Command::Verify {
            params,
            grid,
            format,
            out,
        } => commands::verify(&params, grid, format, out.as_deref()),
        Command::Optimize {
            params,
            config,
            out,
            log,
        } => commands::optimize(&params, config.as_deref(), &out, log.as_deref()),
        Command::Export {
            params,
            what,
            format,
            resolution,
            out,
        } => export::export(&params, what, format, resolution, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if f.code != EXIT_VERIFY {
                eprintln!("error: {:#}", f.error);
            }
            ExitCode::from(f.code)
        }
    }
}
