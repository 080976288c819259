//! Command line front end for the group-equilibrium solver.

mod claims;
mod config;
mod figures;
mod report;
mod sweep;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gess_core::{tol, InvasionGrid};

use crate::config::{ScenarioConfig, DEFAULT_GRID};
use crate::figures::Preset;

const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gess",
    version,
    about = "Solve and verify group equilibria of two-action games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Equality tolerance for the solver; overrides the config's `tol`.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Mutant grid resolution for verification; overrides the config's
    /// `grid`.
    #[arg(long, global = true)]
    grid: Option<f64>,

    /// Directory for generated files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the randomized spot checks. Changes which deviations get
    /// sampled, never what the solver reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one scenario and print a fully verified report.
    Solve { config: PathBuf },
    /// Sweep the configured parameter and emit a CSV table.
    Sweep { config: PathBuf },
    /// Check a strategy profile against the stability conditions.
    Verify {
        config: PathBuf,
        /// Group strategies, comma or space separated, one per group.
        #[arg(long)]
        profile: String,
    },
    /// Write the canned parameter studies for a preset scenario family.
    Figures {
        #[arg(value_enum)]
        preset: Preset,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn config_err(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn io_err(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Command line over config file over built-in default, for both knobs.
fn effective(cli: &Cli, cfg: Option<&ScenarioConfig>) -> Result<(f64, InvasionGrid), Failure> {
    let equality_tol = cli
        .tol
        .or(cfg.and_then(|c| c.tol))
        .unwrap_or(tol::EQUALITY_TOL);
    if !(equality_tol.is_finite() && equality_tol > 0.0) {
        return Err(config_err(format!(
            "--tol must be a positive number, got {equality_tol}"
        )));
    }
    let resolution = cli
        .grid
        .or(cfg.and_then(|c| c.grid))
        .unwrap_or(DEFAULT_GRID);
    if !(resolution.is_finite() && resolution > 0.0 && resolution <= 0.5) {
        return Err(config_err(format!(
            "--grid must lie in (0, 0.5], got {resolution}"
        )));
    }
    let grid = InvasionGrid { resolution, ..InvasionGrid::default() };
    Ok((equality_tol, grid))
}

/// A config `out` names the exact file; otherwise `--out` names the
/// directory and the file is called sweep.csv; otherwise the table goes to
/// stdout.
fn sweep_destination(cli: &Cli, cfg: &ScenarioConfig) -> Option<PathBuf> {
    if let Some(path) = &cfg.out {
        return Some(path.clone());
    }
    cli.out.as_ref().map(|dir| dir.join("sweep.csv"))
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Solve { config } => {
            let cfg = config::load(config).map_err(config_err)?;
            let (equality_tol, grid) = effective(cli, Some(&cfg))?;
            let all_passed =
                report::run_scenario(&cfg, equality_tol, &grid).map_err(config_err)?;
            if all_passed {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: a reported equilibrium failed verification");
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        Command::Sweep { config } => {
            let cfg = config::load(config).map_err(config_err)?;
            let (equality_tol, grid) = effective(cli, Some(&cfg))?;
            let (csv, warnings) =
                sweep::sweep_csv(&cfg, equality_tol, &grid).map_err(config_err)?;
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            match sweep_destination(cli, &cfg) {
                Some(path) => {
                    if let Some(parent) = path.parent() {
                        if !parent.as_os_str().is_empty() {
                            std::fs::create_dir_all(parent).map_err(|e| {
                                io_err(format!("cannot create {}: {e}", parent.display()))
                            })?;
                        }
                    }
                    std::fs::write(&path, csv).map_err(|e| {
                        io_err(format!("cannot write {}: {e}", path.display()))
                    })?;
                    println!("wrote {}", path.display());
                }
                None => print!("{csv}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { config, profile } => {
            let cfg = config::load(config).map_err(config_err)?;
            let (_, grid) = effective(cli, Some(&cfg))?;
            let instance = cfg.fixed_instance().map_err(config_err)?;
            let q = verify::parse_profile(profile, instance.n_groups()).map_err(config_err)?;
            if verify::run_verify(&instance, &q, &grid, cli.seed) {
                println!("verdict: PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verdict: FAIL");
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        Command::Figures { preset } => {
            let (equality_tol, grid) = effective(cli, None)?;
            let out_dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
            figures::run_preset(*preset, equality_tol, &grid, &out_dir).map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
