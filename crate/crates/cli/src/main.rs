mod commands;
mod config;
mod error;
mod io;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{DecoherenceName, ExperimentConfig, ProcessName};
use error::Result;

#[derive(Parser)]
#[command(
    name = "qptlab",
    version,
    about = "Simulated process tomography of a driven three-level system"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// TOML experiment description; built-in defaults apply when omitted
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Directory for reports and artifacts (default "out")
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Override the configured drive scheme
    #[arg(long, value_enum, value_name = "KIND")]
    process: Option<ProcessName>,
    /// Override the configured decoherence preset
    #[arg(long, value_enum, value_name = "PRESET")]
    decoherence: Option<DecoherenceName>,
}

impl CommonArgs {
    fn config(&self) -> Result<ExperimentConfig> {
        let mut config = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        config.apply_overrides(self.process, self.decoherence)?;
        Ok(config)
    }

    fn out_dir(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| PathBuf::from("out"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Integrate the master equation from |0><0| and report the final state
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        /// Also propagate the other eight tomography basis inputs
        #[arg(long)]
        all_inputs: bool,
    },
    /// Simulate the full tomography and reconstruct the process matrix
    Qpt {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run all nine experiments and compare with the published table
    Table1 {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check a stored process matrix for physicality
    Validate {
        #[command(flatten)]
        common: CommonArgs,
        /// report.json, or chi_real.csv with chi_imag.csv next to it
        #[arg(value_name = "PATH")]
        chi: PathBuf,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Simulate { common, all_inputs } => {
            let config = common.config()?;
            let out = common.out_dir();
            let report = commands::cmd_simulate(&config, all_inputs, &out)?;
            if let Some(f) = report.transfer_fidelity {
                println!("transfer fidelity: {f:.6}");
            }
            println!("report: {}", out.join("report.json").display());
        }
        Command::Qpt { common } => {
            let config = common.config()?;
            let out = common.out_dir();
            let report = commands::cmd_qpt(&config, &out)?;
            if let Some(v) = &report.validation {
                println!(
                    "chi trace {:.6}, min eigenvalue {:.3e}, Kraus rank {}",
                    v.trace, v.min_eigenvalue, v.kraus_rank
                );
            }
            println!("artifacts: {}", out.display());
        }
        Command::Table1 { common } => {
            let config = common.config()?;
            commands::cmd_table1(&config, &common.out_dir())?;
        }
        Command::Validate { common, chi } => {
            commands::cmd_validate(&chi, common.out.as_deref())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
