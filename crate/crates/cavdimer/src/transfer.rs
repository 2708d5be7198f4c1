//! `transfer-times`: candidate transfer times and their phase conditions.

use std::io::Write;

use cavdimer_core::transfer::{
    classify_regime, dispersive_transfer_times, entanglement_times, resonant_transfer_times,
};
use cavdimer_core::RegimeLabel;
use serde::{Deserialize, Serialize};

use crate::config::{as_string, Branch, SimulationConfig};
use crate::error::{CliError, CliResult};
use crate::series::format_number;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum TransferRegime {
    Dispersive,
    Resonant,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum TransferRow {
    Dispersive {
        n: usize,
        tau: f64,
        /// Equal-population (maximally entangling) time before `tau`.
        t_entangle: f64,
        phase_ok: bool,
        m: i64,
        residual: f64,
    },
    Resonant {
        n: usize,
        tau: f64,
        omega_condition_ok: bool,
        l: i64,
        residual: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Classification {
    #[serde(with = "as_string")]
    pub label: RegimeLabel,
    pub hopping_ratio: f64,
    pub detuning_ratio: f64,
    pub resonance_ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransferTable {
    pub config: SimulationConfig,
    pub regime: TransferRegime,
    /// Only for the resonant regime.
    pub branch: Option<Branch>,
    pub tolerance: f64,
    pub classification: Classification,
    pub rows: Vec<TransferRow>,
}

impl TransferTable {
    /// A note for stderr when the parameters do not look like the requested
    /// regime.
    pub fn regime_warning(&self) -> Option<String> {
        let label = self.classification.label;
        let fits = match self.regime {
            TransferRegime::Dispersive => matches!(label, RegimeLabel::LargeHopping | RegimeLabel::LargeDetuning),
            TransferRegime::Resonant => label == RegimeLabel::NearResonance,
        };
        (!fits).then(|| format!("warning: parameters classify as {label}; the {:?} times may not apply", self.regime))
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> CliResult<()> {
        match self.regime {
            TransferRegime::Dispersive => writeln!(w, "n,tau,t_entangle,phase_ok,m,residual")?,
            TransferRegime::Resonant => writeln!(w, "n,tau,omega_condition_ok,l,residual")?,
        }
        for row in &self.rows {
            match *row {
                TransferRow::Dispersive { n, tau, t_entangle, phase_ok, m, residual } => writeln!(
                    w,
                    "{n},{},{},{phase_ok},{m},{}",
                    format_number(Some(tau)),
                    format_number(Some(t_entangle)),
                    format_number(Some(residual))
                )?,
                TransferRow::Resonant { n, tau, omega_condition_ok, l, residual } => writeln!(
                    w,
                    "{n},{},{omega_condition_ok},{l},{}",
                    format_number(Some(tau)),
                    format_number(Some(residual))
                )?,
            }
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> CliResult<()> {
        serde_json::to_writer_pretty(&mut w, self)?;
        writeln!(w)?;
        Ok(())
    }
}

/// Candidate times for `n = 0..=n_max`. The resonant branch defaults to the
/// delocalized mode nearer the atoms.
pub fn transfer_times(
    config: &SimulationConfig,
    regime: TransferRegime,
    branch: Option<Branch>,
    n_max: usize,
    tolerance: f64,
    threshold: f64,
) -> CliResult<TransferTable> {
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(CliError::Usage(format!("--tolerance must be non-negative, got {tolerance}")));
    }
    let params = config.params()?;
    let c = classify_regime(&params, threshold)?;
    let classification = Classification {
        label: c.label,
        hopping_ratio: c.ratios.hopping,
        detuning_ratio: c.ratios.detuning,
        resonance_ratio: c.ratios.resonance,
    };
    let (rows, branch) = match regime {
        TransferRegime::Dispersive => {
            let entangle = entanglement_times(&params, n_max)?;
            let rows = dispersive_transfer_times(&params, n_max, tolerance)?
                .into_iter()
                .zip(entangle)
                .map(|(r, t_entangle)| TransferRow::Dispersive {
                    n: r.n,
                    tau: r.tau,
                    t_entangle,
                    phase_ok: r.phase_ok,
                    m: r.m,
                    residual: r.residual,
                })
                .collect();
            (rows, None)
        }
        TransferRegime::Resonant => {
            let branch = branch.unwrap_or_else(|| cavdimer_core::NearResonantBranch::nearest(&params).into());
            let rows = resonant_transfer_times(&params, branch.into(), n_max, tolerance)?
                .into_iter()
                .map(|r| TransferRow::Resonant {
                    n: r.n,
                    tau: r.tau,
                    omega_condition_ok: r.omega_condition_ok,
                    l: r.l,
                    residual: r.residual,
                })
                .collect();
            (rows, Some(branch))
        }
    };
    Ok(TransferTable { config: config.clone(), regime, branch, tolerance, classification, rows })
}
