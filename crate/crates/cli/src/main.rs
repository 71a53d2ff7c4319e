use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinbundle_cli::{load_config, run, write_outcome, CliError, Command, ExperimentConfig, EXIT_CHECK_FAILED};

#[derive(Parser)]
#[command(name = "spinbundle", version, about = "Spin-1/2 representation experiments")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// JSON experiment config; defaults are used when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Report path; a `.csv` extension selects the tabular form.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Quadrature points per momentum axis.
    #[arg(long = "grid-n", global = true)]
    grid_n: Option<usize>,

    /// Use the cube [-pmax, pmax]³ instead of per-state covering grids.
    #[arg(long, global = true)]
    pmax: Option<f64>,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Run the identity catalogue; exit 1 if any residual exceeds its tolerance.
    Verify,
    /// Reduced-matrix covariance table for each state and transformation.
    Covariance,
    /// Spin observables of each configured state.
    Expectation,
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let mut config = match &cli.config {
        Some(path) => load_config(path)?,
        None => ExperimentConfig::default(),
    };
    config.apply_overrides(cli.seed, cli.grid_n, cli.pmax)?;
    let command = match cli.command {
        Cmd::Verify => Command::Verify,
        Cmd::Covariance => Command::Covariance,
        Cmd::Expectation => Command::Expectation,
    };
    let outcome = run(command, &config)?;
    match cli.out.as_ref().or(config.output.as_ref()) {
        Some(path) => write_outcome(&outcome, path)?,
        None => print!("{}", outcome.json),
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("spinbundle: one or more checks failed");
            ExitCode::from(EXIT_CHECK_FAILED as u8)
        }
        Err(e) => {
            eprintln!("spinbundle: {e}");
            if let Some(hint) = e.hint() {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
