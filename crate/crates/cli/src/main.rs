//! `pzeta`: command-line front end for partial zeta functions.
//!
//! Exit codes: 0 success, 1 a verification did not pass, 2 invalid
//! configuration, 3 domain error, 4 too close to a singular point,
//! 5 budget exceeded.

mod commands;
mod fmt;
mod graph_cmd;
mod system;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use partial_zeta::ZetaError;

use system::SystemArgs;

#[derive(Parser, Debug)]
#[command(name = "pzeta", version, about = "Partial zeta functions over primes of prescribed Frobenius order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Debug)]
pub struct OutArgs {
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the primes with norm up to the cutoff as CSV.
    Sieve {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        cutoff: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Truncated ζ_P, Z_P and ζ_{P_n} at points with Re s > 1.
    Eval {
        #[command(flatten)]
        sys: SystemArgs,
        /// Evaluation point such as `2+1i`; repeatable.
        #[arg(long = "s", required = true, allow_hyphen_values = true)]
        s: Vec<String>,
        #[arg(long, default_value_t = 1e5)]
        cutoff: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// f(s)^{q^r} on Re s > 1/q^r, at points (JSON) or on a grid (CSV).
    Continue {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long = "s", allow_hyphen_values = true, conflicts_with = "grid", required_unless_present = "grid")]
        s: Vec<String>,
        /// `re0:re1:n_re,im0:im1:n_im`.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long, default_value_t = 1e5)]
        cutoff: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Residuals of the functional equations and of the Z_P factorization.
    FeqCheck {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long = "s", required = true, allow_hyphen_values = true)]
        s: Vec<String>,
        #[arg(long, default_value_t = 1e5)]
        cutoff: f64,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Zeros and poles of g in 0 < Re s < 1, 0 < Im s < T.
    Zeros {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        height: f64,
        /// Emit the catalog as CSV (re,im,order) instead of JSON.
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Natural-boundary diagnostics up to height T.
    Boundary {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        height: f64,
        #[arg(long, default_value_t = 20)]
        windows: usize,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        /// Abscissa α in (0, 1/2) for the pole count J_α.
        #[arg(long, default_value_t = 0.25)]
        alpha: f64,
        /// Dilation depth for the Ω_q count.
        #[arg(long, default_value_t = 2)]
        k_max: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Exact computations on a voltage graph.
    Graph {
        #[command(subcommand)]
        command: graph_cmd::GraphCommand,
    },
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Zeta(ZetaError),
    /// A verification ran but did not pass; the report was still written.
    Failed,
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        CliError::Zeta(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed => 1,
            CliError::Config(_) => 2,
            CliError::Zeta(e) => match e {
                ZetaError::InvalidInput(_)
                | ZetaError::GroupOrder(_)
                | ZetaError::Io(_)
                | ZetaError::Csv(_)
                | ZetaError::Json(_) => 2,
                ZetaError::Domain(_) | ZetaError::PoleAtOne | ZetaError::InsufficientData(_) => 3,
                ZetaError::SingularityProximity { .. } | ZetaError::SingularLocalFactor { .. } => 4,
                ZetaError::Budget(_) => 5,
                ZetaError::UnresolvedBox(_) | ZetaError::RootRefinement(_) => 1,
            },
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sieve { sys, cutoff, out } => commands::sieve(&sys, cutoff, &out),
        Command::Eval { sys, s, cutoff, out } => commands::eval(&sys, &s, cutoff, &out),
        Command::Continue { sys, s, grid, depth, cutoff, out } => {
            commands::continue_cmd(&sys, &s, grid.as_deref(), depth, cutoff, &out)
        }
        Command::FeqCheck { sys, s, cutoff, tolerance, out } => commands::feq_check(&sys, &s, cutoff, tolerance, &out),
        Command::Zeros { sys, height, csv, out } => commands::zeros(&sys, height, csv, &out),
        Command::Boundary { sys, height, windows, delta, alpha, k_max, out } => {
            commands::boundary(&sys, height, windows, delta, alpha, k_max, &out)
        }
        Command::Graph { command } => graph_cmd::run(command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Config(msg) => eprintln!("pzeta: invalid configuration: {msg}"),
                CliError::Zeta(err) => eprintln!("pzeta: {err}"),
                CliError::Failed => eprintln!("pzeta: verification failed"),
            }
            ExitCode::from(e.code())
        }
    }
}
