//! Command-line definitions and dispatch.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use cavdimer_core::transfer::DEFAULT_TOLERANCE;
use cavdimer_core::Backend;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{config_from_json, Branch, InitialState, SimulationConfig};
use crate::error::{CliError, CliResult};
use crate::scan::{scan, Observable, ScanParam, ScanSpec};
use crate::simulate::{compare, simulate, validity_warning};
use crate::transfer::{transfer_times, TransferRegime};

/// Two coupled cavities, one two-level atom in each: simulate, compare
/// models, sweep parameters and solve for transfer times.
///
/// Frequencies are in units of g and times in units of 1/g. Setting --g
/// rescales everything; output times are then in absolute units.
#[derive(Debug, Parser)]
#[command(name = "cavdimer", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Populations on a uniform time grid.
    Simulate {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Amplitude deviation between two models (JSON report).
    Compare {
        #[command(flatten)]
        system: SystemArgs,
        /// Model to compare --model against.
        #[arg(long, value_parser = parse_backend)]
        against: Backend,
        /// Output file; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep one parameter and record a transfer observable.
    Scan {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum)]
        param: ScanParam,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, value_enum, default_value = "max-transfer-prob")]
        observable: Observable,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Candidate perfect-transfer times and their phase conditions.
    TransferTimes {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "dispersive")]
        regime: TransferRegime,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        /// Accepted distance from an integer in the phase conditions.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Ratio that counts as "much greater" when classifying the regime.
        #[arg(long, default_value_t = cavdimer_core::transfer::DEFAULT_THRESHOLD)]
        threshold: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// System and run parameters. Anything left out comes from --config, or
/// from the defaults (A = 10, Δ = 0.1, ω_f = 1000, oracle, atom 1, t ≤ 40).
#[derive(Debug, Default, Args)]
pub struct SystemArgs {
    /// Read the run configuration from a JSON file (a previous output works).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// exact, oracle, dispersive, resonant or near-resonant.
    #[arg(long, value_parser = parse_backend)]
    pub model: Option<Backend>,
    /// Atom-field coupling; the unit of every other frequency.
    #[arg(long)]
    pub g: Option<f64>,
    /// Photon hopping strength A.
    #[arg(long, allow_hyphen_values = true)]
    pub hopping: Option<f64>,
    /// Atom-cavity detuning Δ = ω_a − ω_f.
    #[arg(long, allow_hyphen_values = true)]
    pub detuning: Option<f64>,
    /// Bare cavity frequency ω_f.
    #[arg(long, allow_hyphen_values = true)]
    pub omega_f: Option<f64>,
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub samples: Option<usize>,
    /// atom1, atom2, cav1, cav2, or a qubit "theta,phi" held by atom 1.
    #[arg(long, value_parser = parse_init)]
    pub init: Option<InitialState>,
    /// Delocalized mode the resonant models assume the atoms are tuned to.
    #[arg(long, value_enum)]
    pub branch: Option<Branch>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Default, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_backend(s: &str) -> Result<Backend, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_init(s: &str) -> Result<InitialState, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

impl SystemArgs {
    pub fn resolve(&self) -> CliResult<SimulationConfig> {
        let mut c = match &self.config {
            Some(path) => config_from_json(&std::fs::read_to_string(path)?)?,
            None => SimulationConfig::default(),
        };
        macro_rules! apply {
            ($($field:ident),*) => { $(if let Some(v) = self.$field { c.$field = v; })* };
        }
        apply!(model, g, hopping, detuning, omega_f, t_max, samples, init, branch);
        c.validate()?;
        Ok(c)
    }
}

fn open(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Simulate { system, output } => {
            let config = system.resolve()?;
            let series = simulate(&config)?;
            if let Some(w) = validity_warning(&config, config.model) {
                eprintln!("{w}");
            }
            let mut out = open(&output.output)?;
            match output.format {
                Format::Csv => series.write_csv(&mut out)?,
                Format::Json => series.write_json(&mut out)?,
            }
            out.flush()?;
        }
        Command::Compare { system, against, output } => {
            let config = system.resolve()?;
            let report = compare(&config, against)?;
            for model in [config.model, against] {
                if let Some(w) = validity_warning(&config, model) {
                    eprintln!("{w}");
                }
            }
            let mut out = open(&output)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            out.flush()?;
        }
        Command::Scan { system, param, from, to, points, observable, output } => {
            let config = system.resolve()?;
            let table = scan(&config, ScanSpec { param, from, to, points, observable })?;
            let mut out = open(&output.output)?;
            match output.format {
                Format::Csv => table.write_csv(&mut out)?,
                Format::Json => table.write_json(&mut out)?,
            }
            out.flush()?;
        }
        Command::TransferTimes { system, regime, n_max, tolerance, threshold, output } => {
            let config = system.resolve()?;
            let table = transfer_times(&config, regime, system.branch, n_max, tolerance, threshold)?;
            if let Some(w) = table.regime_warning() {
                eprintln!("{w}");
            }
            let mut out = open(&output.output)?;
            match output.format {
                Format::Csv => table.write_csv(&mut out)?,
                Format::Json => table.write_json(&mut out)?,
            }
            out.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn flags_override_defaults() {
        let cli =
            Cli::try_parse_from(["cavdimer", "simulate", "--hopping", "100", "--detuning", "-100", "--init", "0.5,0"])
                .unwrap();
        let Command::Simulate { system, .. } = cli.command else { panic!() };
        let c = system.resolve().unwrap();
        assert_eq!((c.hopping, c.detuning, c.omega_f), (100.0, -100.0, 1000.0));
        assert_eq!(c.init.to_string(), "0.5,0.0");
    }

    #[test]
    fn unknown_model_is_a_usage_error() {
        let err = Cli::try_parse_from(["cavdimer", "simulate", "--model", "bogus"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
