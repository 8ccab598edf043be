//! Library side of the `tropolocate` command: problem-file parsing, report
//! assembly and SVG rendering. The binary is a thin clap wrapper.

#![forbid(unsafe_code)]

pub mod problem_file;
pub mod report;
pub mod svg;

use std::path::Path;

use tropolocate_core::location::solve;
use tropolocate_core::oracle::{grid_minimize, OracleConfig};
use tropolocate_core::{Error, LocationProblem, DEFAULT_TOL};

pub use problem_file::parse_problem;
pub use report::{OracleSummary, ReportFile};

/// Environment variable overriding the default solver tolerance.
pub const TOL_ENV: &str = "TROPOLOCATE_TOL";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("invalid JSON: {0}")]
    Parse(String),
    #[error("invalid problem file: {0}")]
    Schema(String),
    #[error("{0}")]
    Usage(String),
    #[error("plotting needs points of dimension 2, got {0}")]
    DimensionUnsupported(usize),
    #[error(transparent)]
    Solver(#[from] Error),
}

impl CliError {
    /// 2 for violated solver premises, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(
                Error::PremiseViolation(_) | Error::NotIrreducible | Error::EmptyPlus,
            ) => 2,
            _ => 1,
        }
    }
}

/// Resolves the tolerance: explicit flag, then the environment, then the default.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>) -> Result<f64, CliError> {
    let tol = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(raw)) => raw
            .trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("{TOL_ENV}: not a number: {raw:?}")))?,
        (None, None) => DEFAULT_TOL,
    };
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::Usage(format!(
            "tolerance must be a non-negative number, got {tol}"
        )));
    }
    Ok(tol)
}

pub fn read_problem(path: &Path) -> Result<LocationProblem, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&text)
}

/// Solves a problem and, when `oracle_step` is given, cross-checks it on a grid
/// with feasibility tolerance equal to the step.
pub fn solve_problem(
    problem: &LocationProblem,
    tol: f64,
    oracle_step: Option<f64>,
) -> Result<ReportFile, CliError> {
    let rep = solve(problem, tol)?;
    let oracle = match oracle_step {
        None => None,
        Some(step) => {
            let cfg = OracleConfig::around(problem, step, step)?;
            let res = grid_minimize(problem, &cfg)?;
            Some(OracleSummary::new(res.value, res.argmin, step))
        }
    };
    Ok(ReportFile::from_solution(&rep, oracle))
}

pub fn render_plot(problem: &LocationProblem, tol: f64) -> Result<String, CliError> {
    if problem.dim() != 2 {
        return Err(CliError::DimensionUnsupported(problem.dim()));
    }
    let rep = solve(problem, tol)?;
    Ok(svg::render(problem, &rep)?)
}
