//! `diracband`: eigenvalue sweeps, spectral flow, mapping degrees and
//! self-checks for the Dirac operator on a ball.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod error;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "diracband", version, about = "Dirac spectra on a ball with APS and chiral-bag boundary conditions")]
struct Cli {
    /// Worker threads for the data-parallel parts (0 = one per core).
    #[arg(long, global = true, env = "DIRACBAND_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Trace eigenvalue branches over a μ grid and write them as CSV.
    Sweep(SweepArgs),
    /// Count the spectral flow of branches read from a sweep CSV.
    Flow(FlowArgs),
    /// Mapping degrees of the semi-quantum maps at one mass.
    Degree(DegreeArgs),
    /// Run built-in consistency checks and report them as JSON.
    Verify(VerifyArgs),
    /// Compare dispersion roots with the independent shooting oracle.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcArg {
    /// APS with boundary values in the negative eigenspace.
    Aps,
    /// APS with boundary values in the positive eigenspace.
    ApsPlus,
    /// Chiral bag with angle --chiral-lambda.
    Chiral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpinorArg {
    Phi,
    Psi,
}

/// Boundary condition, sector and radius shared by several commands.
#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    #[arg(long, value_enum, default_value = "aps")]
    pub bc: BcArg,
    /// Total angular momentum j (a positive half-integer).
    #[arg(long, default_value_t = 3.5)]
    pub j: f64,
    /// Ball radius R.
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Chiral angle λ, used with --bc chiral.
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    pub chiral_lambda: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchKind {
    Edge,
    Bulk,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
    pub mu_min: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    pub mu_max: f64,
    #[arg(long, default_value_t = 201)]
    pub mu_steps: usize,
    /// Which kinds of eigenvalues to trace.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "edge")]
    pub branches: Vec<BranchKind>,
    /// Bulk eigenvalues per sign of E when bulk branches are requested.
    #[arg(long, default_value_t = 4)]
    pub n_bulk: usize,
    /// CSV destination (stdout if omitted).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Also write a gnuplot script next to the CSV.
    #[arg(long, requires = "output")]
    pub emit_plot: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlowModeArg {
    Ordinary,
    Extended,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    /// Sweep CSV to read.
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "ordinary")]
    pub mode: FlowModeArg,
}

#[derive(Debug, Args)]
pub struct DegreeArgs {
    /// Mass μ (the jump uses ±|μ|).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mu: f64,
    /// Report the jumps of the degrees across μ = 0 instead.
    #[arg(long)]
    pub jump: bool,
    /// Grid step of the trace-form integral (default min(0.05, |μ|/20)).
    #[arg(long)]
    pub trace_step: Option<f64>,
    /// Radius of the trace-form grid ball in units of |μ|.
    #[arg(long, default_value_t = 8.0)]
    pub trace_ball: f64,
    /// Skip the trace-form integral, which is the slow one.
    #[arg(long)]
    pub no_trace_form: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Symmetry,
    Current,
    Angular,
    Projector,
    Limits,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "symmetry,current,angular,projector,limits")]
    pub suite: Vec<Suite>,
    /// Mass at which the μ-dependent checks run.
    #[arg(long, default_value_t = 0.7, allow_negative_numbers = true)]
    pub mu: f64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, default_value = "phi")]
    pub spinor: SpinorArg,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: f64,
    /// Bulk roots compared on each side of the spectrum.
    #[arg(long, default_value_t = 3)]
    pub count: usize,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep(args) => commands::sweep(&args),
        Command::Flow(args) => commands::flow(&args),
        Command::Degree(args) => commands::degree(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Oracle(args) => commands::oracle(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    match diracband_core::exec::with_threads(threads, move || run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("diracband: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
