use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tropolocate::{read_problem, render_plot, resolve_tol, solve_problem, CliError, TOL_ENV};

#[derive(Parser)]
#[command(
    name = "tropolocate",
    version,
    about = "Minimax single-facility location in the Chebyshev metric"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file and print a report.
    Solve {
        file: PathBuf,
        /// Also minimize on a grid and include the result.
        #[arg(long)]
        oracle: bool,
        /// Grid spacing for --oracle.
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        /// Solver tolerance (overrides TROPOLOCATE_TOL).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Draw a two-dimensional problem as SVG.
    Plot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn env_tol() -> Option<String> {
    std::env::var(TOL_ENV).ok()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            file,
            oracle,
            step,
            tol,
            format,
        } => {
            let tol = resolve_tol(tol, env_tol().as_deref())?;
            let problem = read_problem(&file)?;
            let report = solve_problem(&problem, tol, oracle.then_some(step))?;
            match format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
        }
        Command::Plot { file, out, tol } => {
            let tol = resolve_tol(tol, env_tol().as_deref())?;
            let problem = read_problem(&file)?;
            let svg = render_plot(&problem, tol)?;
            std::fs::write(&out, svg)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", out.display())))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
