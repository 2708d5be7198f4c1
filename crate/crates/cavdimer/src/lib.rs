//! File formats and command implementations behind the `cavdimer` binary.
//!
//! Every command takes a [`SimulationConfig`](config::SimulationConfig) and
//! returns a table that can be written as CSV or as JSON. JSON outputs carry
//! the configuration under `config`, and feeding such a file back through
//! `--config` repeats the run.

pub mod cli;
pub mod config;
pub mod error;
pub mod scan;
pub mod series;
pub mod simulate;
pub mod transfer;

pub use config::{InitialState, SimulationConfig};
pub use error::{CliError, CliResult};
pub use series::TimeSeries;
