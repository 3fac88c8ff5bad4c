mod commands;
mod source;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use qwgsim_core::comparison::{DEFAULT_PHI, DEFAULT_THETA};
use qwgsim_core::metrics::DEFAULT_EPSILON;
use qwgsim_core::{Accumulation, CompareConfig, Enumeration, MetricConfig, StepPolicy};

/// Quantum-walk graph similarity.
#[derive(Parser, Debug)]
#[command(name = "qwgsim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Similarity of two graphs as a JSON report.
    Compare(commands::CompareArgs),
    /// A classical baseline (deltacon or mcs) as JSON.
    Baseline(commands::BaselineArgs),
    /// Node probabilities of a single walk as CSV.
    Walk(commands::WalkArgs),
    /// Write a generated or builtin graph.
    Generate(commands::GenerateArgs),
    /// Edge-removal ensemble: per-trial CSV plus a per-count summary CSV.
    Experiment(commands::ExperimentArgs),
    /// Similarity of fixed graph pairs under several metrics as CSV.
    Table(commands::TableArgs),
}

/// Walk and scoring options shared by the comparison commands.
#[derive(Args, Clone, Debug)]
pub struct ScoreOptions {
    /// Phase on the first reference vertex, radians in (0, 2pi).
    #[arg(long, default_value_t = DEFAULT_THETA)]
    pub theta: f64,
    /// Phase on the second reference vertex, radians in (0, 2pi).
    #[arg(long, default_value_t = DEFAULT_PHI)]
    pub phi: f64,
    /// `auto` or a fixed step count.
    #[arg(long, default_value = "auto")]
    pub steps: StepPolicy,
    /// `paper` or `symmetric` enumeration of reference pairs.
    #[arg(long, default_value = "paper")]
    pub mode: Enumeration,
    /// Threshold metric cut-off.
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Norm over the time series: `l2` or `l1`.
    #[arg(long, default_value = "l2")]
    pub accumulation: Accumulation,
}

impl ScoreOptions {
    pub fn config(&self, metric: &str, seed: u64) -> Result<CompareConfig> {
        let metric = MetricConfig::named(metric)
            .map_err(input)?
            .with_epsilon(self.epsilon)
            .with_accumulation(self.accumulation);
        let cfg = CompareConfig {
            theta: self.theta,
            phi: self.phi,
            steps: self.steps,
            enumeration: self.mode,
            metric,
            seed,
        };
        cfg.validate().map_err(input)?;
        Ok(cfg)
    }
}

/// Marks an error as caused by the user's input (exit status 2).
#[derive(Debug)]
pub struct InputError(anyhow::Error);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

pub fn input(e: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow::Error::new(InputError(e.into()))
}

fn init_threads() -> Result<()> {
    let Ok(raw) = std::env::var("QWGSIM_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("QWGSIM_THREADS must be a positive integer, got {raw:?}"))
        .map_err(input)?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("cannot configure the worker pool")
}

pub fn output_path(path: &Option<PathBuf>) -> Option<&PathBuf> {
    path.as_ref().filter(|p| p.as_os_str() != "-")
}

fn run(cli: Cli) -> Result<()> {
    init_threads()?;
    match cli.command {
        Command::Compare(args) => commands::compare(&args),
        Command::Baseline(args) => commands::baseline(&args),
        Command::Walk(args) => commands::walk(&args),
        Command::Generate(args) => commands::generate(&args),
        Command::Experiment(args) => commands::experiment(&args),
        Command::Table(args) => commands::table(&args),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
