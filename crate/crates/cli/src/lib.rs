//! `hhcert`: batch front-end over `hh_core`. Every invocation yields one
//! [`RunReport`] document and an exit code (0 clean, 1 violation, 2 usage
//! or domain error).

pub mod args;
mod commands;
pub mod render;
pub mod sampler;

use hh_core::{HhError, Report64, Tolerance64};
use serde::Serialize;

pub use args::{Cli, Command, IntegrateArgs, SpecialArgs, SpecialFn, Target, VerifyArgs};
pub use commands::{run_integrate, run_special, run_verify};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] HhError),
}

/// One bound evaluation tagged with the trial and interval it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub a: f64,
    pub b: f64,
    #[serde(flatten)]
    pub report: Report64,
}

/// A target skipped on one trial because a hypothesis guard failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Guarded {
    pub trial: usize,
    pub a: f64,
    pub b: f64,
    pub target: String,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub checked: usize,
    pub satisfied: usize,
    pub violated: usize,
    pub guarded_out: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: Command,
    pub abs_tol: f64,
    pub reports: Vec<TrialReport>,
    pub counts: Counts,
    /// Reports violated as printed, with full inputs.
    pub findings: Vec<TrialReport>,
    pub guarded: Vec<Guarded>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
}

impl RunReport {
    pub fn new(
        command: Command,
        cfg: &Tolerance64,
        reports: Vec<TrialReport>,
        guarded: Vec<Guarded>,
        result: Option<serde_json::Value>,
    ) -> Self {
        let satisfied = reports.iter().filter(|r| r.report.satisfied).count();
        let findings: Vec<TrialReport> = reports.iter().filter(|r| !r.report.satisfied).cloned().collect();
        let counts = Counts {
            checked: reports.len() + guarded.len(),
            satisfied,
            violated: findings.len(),
            guarded_out: guarded.len(),
        };
        Self { command, abs_tol: cfg.abs_tol, reports, counts, findings, guarded, result }
    }

    pub fn exit_code(&self) -> u8 {
        if self.counts.violated > 0 {
            1
        } else {
            0
        }
    }
}

/// Default tolerances with `abs_tol` taken from `HH_TOL` when set.
pub fn tolerance_from_env() -> Result<Tolerance64, CliError> {
    let cfg = Tolerance64::default();
    match std::env::var("HH_TOL") {
        Ok(s) => {
            let tol: f64 = s
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("HH_TOL is not a number: {s:?}")))?;
            cfg.with_abs_tol(tol)
                .validated()
                .ok_or_else(|| CliError::Usage(format!("HH_TOL must be positive, got {tol}")))
        }
        Err(_) => Ok(cfg),
    }
}

pub fn run(cli: &Cli, cfg: &Tolerance64) -> Result<RunReport, CliError> {
    match &cli.command {
        Command::Verify(v) => run_verify(v, cfg),
        Command::Integrate(i) => run_integrate(i, cfg),
        Command::Special(s) => run_special(s, cfg),
    }
}
