//! Configuration-driven experiment runner for `spinbundle`.
//!
//! Three commands share one JSON config: `verify` runs the identity
//! catalogue, `covariance` tabulates reduced-matrix behaviour under the
//! configured transformations, and `expectation` reports spin observables of
//! the configured states. Reports are deterministic for a fixed config.

pub mod commands;
pub mod config;
pub mod verify;

use std::path::{Path, PathBuf};

use serde::Serialize;

pub use commands::{run_covariance, run_expectation, CovarianceTable, ExpectationReport};
pub use config::{ExperimentConfig, TransformKind, TransformSpec};
pub use verify::{run_verify, CheckResult, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write output: {0}")]
    Output(String),

    #[error(transparent)]
    Library(#[from] spinbundle::Error),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Read { .. } | CliError::Output(_) => EXIT_CONFIG,
            CliError::Library(spinbundle::Error::InsufficientCoverage { .. }) => EXIT_CONFIG,
            _ => EXIT_CHECK_FAILED,
        }
    }

    /// What to change in the config, when there is something obvious.
    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Library(spinbundle::Error::InsufficientCoverage { .. }) => {
                Some("increase --pmax (or grid.p_max), or omit it to use covering grids")
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Verify,
    Covariance,
    Expectation,
}

/// A finished report, rendered.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: String,
    /// Tabular form, where the command has one.
    pub csv: Option<String>,
    pub passed: bool,
}

fn render<T: Serialize>(report: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

fn checks_csv(report: &VerifyReport) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "tag", "samples", "max_residual", "tolerance", "passed"])?;
    for c in &report.checks {
        w.write_record([
            c.name.to_string(),
            c.tag.to_string(),
            c.samples.to_string(),
            format!("{:e}", c.max_residual),
            format!("{:e}", c.tolerance),
            c.passed.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

pub fn run(command: Command, config: &ExperimentConfig) -> Result<Outcome, CliError> {
    match command {
        Command::Verify => {
            let r = run_verify(config)?;
            Ok(Outcome {
                json: render(&r)?,
                csv: Some(checks_csv(&r)?),
                passed: r.passed,
            })
        }
        Command::Covariance => {
            let r = run_covariance(config)?;
            Ok(Outcome {
                json: render(&r)?,
                csv: Some(r.to_csv()?),
                passed: r.passed,
            })
        }
        Command::Expectation => {
            let r = run_expectation(config)?;
            Ok(Outcome {
                json: render(&r)?,
                csv: None,
                passed: true,
            })
        }
    }
}

/// Reads and validates a config file.
pub fn load_config(path: &Path) -> Result<ExperimentConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    ExperimentConfig::from_json(&text)
}

/// Writes the outcome to `path`: CSV when the extension is `.csv`, JSON otherwise.
pub fn write_outcome(outcome: &Outcome, path: &Path) -> Result<(), CliError> {
    let csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let body = match (csv, &outcome.csv) {
        (true, Some(table)) => table,
        (true, None) => return Err(CliError::Output("this command has no tabular output".into())),
        (false, _) => &outcome.json,
    };
    std::fs::write(path, body).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))
}
