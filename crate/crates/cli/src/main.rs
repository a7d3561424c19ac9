use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fatiguefield_cli::acceptance;
use fatiguefield_cli::commands::{
    cmd_landscape, cmd_run, cmd_sweep, parse_value_list, CmdResult,
};

/// Phase-field damage and fatigue simulator.
#[derive(Parser)]
#[command(name = "fatiguefield", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one configuration and write its trajectory CSV.
    Run {
        /// Path to a sectioned key=value configuration file.
        config: PathBuf,
    },
    /// Sweep one parameter axis and write a summary CSV.
    Sweep {
        config: PathBuf,
        /// Parameter to sweep: rho | omega | amplitude | F0 | kappa.
        #[arg(long)]
        axis: String,
        /// Comma-separated list of axis values.
        #[arg(long)]
        values: String,
        /// Time at which the damage profiles are compared.
        #[arg(long)]
        snapshot: f64,
        /// Output CSV path (default: sweep.csv next to the trajectory).
        #[arg(long, default_value = "sweep.csv")]
        out: String,
    },
    /// Sample homogeneous energy landscapes, one CSV per fatigue value.
    Landscape {
        #[arg(long)]
        f0: f64,
        /// Comma-separated fatigue values.
        #[arg(long)]
        fatigue: String,
        #[arg(long)]
        samples: usize,
        /// Output directory.
        #[arg(long)]
        out: String,
    },
    /// Execute the acceptance property suite and print pass/fail lines.
    Check,
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Run { config } => cmd_run(&config),
        Command::Sweep {
            config,
            axis,
            values,
            snapshot,
            out,
        } => {
            let values = parse_value_list(&values)?;
            cmd_sweep(&config, &axis, &values, snapshot, &out)
        }
        Command::Landscape {
            f0,
            fatigue,
            samples,
            out,
        } => {
            let fatigue = parse_value_list(&fatigue)?;
            cmd_landscape(f0, &fatigue, samples, &out)
        }
        Command::Check => {
            let results = acceptance::run_all();
            if acceptance::report(&results) {
                Ok(())
            } else {
                Err(fatiguefield_cli::commands::CmdError {
                    exit_code: 1,
                    message: "one or more acceptance criteria failed".into(),
                })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage problems are validation errors (exit 1); --help/--version exit 0
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit_code as u8)
        }
    }
}
