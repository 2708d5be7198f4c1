//! One-parameter sweeps of transfer observables.

use std::io::Write;

use cavdimer_core::analysis::{first_peak, global_max};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::SimulationConfig;
use crate::error::{CliError, CliResult};
use crate::series::write_csv_record;
use crate::simulate::simulator;

/// Relative time tolerance of the golden-section peak refinement.
pub const PEAK_TOLERANCE: f64 = 1e-6;
/// An excursion of `|d|²` above this fraction of its maximum is a transfer
/// peak; fast ripples below it are ignored.
pub const PEAK_FRACTION: f64 = 0.5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ScanParam {
    Hopping,
    Detuning,
    /// The coupling, with `A`, `Δ`, `ω_f` and the time window held fixed in
    /// absolute units.
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Observable {
    /// Largest `|d(t)|²` over the window.
    MaxTransferProb,
    /// Time of the first transfer peak of `|d(t)|²`.
    FirstTransferTime,
    /// `δ = Δ₂/2 + g²/Δ₁`, from the closed form.
    BeatFrequency,
}

impl Observable {
    pub fn name(self) -> &'static str {
        match self {
            Observable::MaxTransferProb => "max_transfer_prob",
            Observable::FirstTransferTime => "first_transfer_time",
            Observable::BeatFrequency => "beat_frequency",
        }
    }
}

impl ScanParam {
    pub fn name(self) -> &'static str {
        match self {
            ScanParam::Hopping => "hopping",
            ScanParam::Detuning => "detuning",
            ScanParam::G => "g",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanSpec {
    pub param: ScanParam,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    pub observable: Observable,
}

impl ScanSpec {
    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.from];
        }
        let step = (self.to - self.from) / (self.points - 1) as f64;
        (0..self.points).map(|k| if k + 1 == self.points { self.to } else { self.from + step * k as f64 }).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanTable {
    pub config: SimulationConfig,
    pub scan: ScanSpec,
    /// `[value, observable]`; the observable is null where it does not exist
    /// (no transfer peak, or a singular beat frequency).
    pub rows: Vec<(f64, Option<f64>)>,
}

impl ScanTable {
    pub fn write_csv<W: Write>(&self, mut w: W) -> CliResult<()> {
        writeln!(w, "{},{}", self.scan.param.name(), self.scan.observable.name())?;
        for &(x, y) in &self.rows {
            write_csv_record(&mut w, [Some(x), y])?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> CliResult<()> {
        serde_json::to_writer_pretty(&mut w, self)?;
        writeln!(w)?;
        Ok(())
    }
}

/// The observable at one parameter value.
pub fn observe(
    config: &SimulationConfig,
    param: ScanParam,
    value: f64,
    observable: Observable,
) -> CliResult<Option<f64>> {
    let params = match param {
        ScanParam::Hopping => SimulationConfig { hopping: value, ..config.clone() }.params()?,
        ScanParam::Detuning => SimulationConfig { detuning: value, ..config.clone() }.params()?,
        ScanParam::G => config.params_with_g(value)?,
    };
    if observable == Observable::BeatFrequency {
        return match params.beat_frequency() {
            Ok(delta) => Ok(Some(delta)),
            Err(e) if e.is_domain_error() => Ok(None),
            Err(e) => Err(e.into()),
        };
    }
    let sim = cavdimer_core::Simulator::with_branch(config.model, params, config.branch.into())?;
    let init = config.init.amplitudes();
    // the only failures are an unsupported initial state or non-finite input,
    // both of which already show at t = 0
    sim.evolve(&init, 0.0)?;
    let p_atom2 = |t: f64| sim.evolve(&init, t).map_or(f64::NAN, |s| s.d.norm_sqr());
    let horizon = config.horizon();
    Ok(match observable {
        Observable::MaxTransferProb => Some(global_max(p_atom2, horizon, config.samples, PEAK_TOLERANCE).value),
        Observable::FirstTransferTime => {
            first_peak(p_atom2, horizon, config.samples, PEAK_FRACTION, PEAK_TOLERANCE).map(|e| e.t)
        }
        Observable::BeatFrequency => unreachable!(),
    })
}

/// Evaluates the sweep, in parallel over points, keeping the input order.
pub fn scan(config: &SimulationConfig, spec: ScanSpec) -> CliResult<ScanTable> {
    config.validate()?;
    if spec.points == 0 {
        return Err(CliError::Usage("--points must be at least 1".into()));
    }
    if !(spec.from.is_finite() && spec.to.is_finite()) {
        return Err(CliError::Usage("scan bounds must be finite".into()));
    }
    simulator(config, config.model)?;
    let rows = spec
        .values()
        .into_par_iter()
        .map(|x| match observe(config, spec.param, x, spec.observable) {
            Ok(y) => Ok((x, y)),
            Err(CliError::Core(e)) if e.is_domain_error() => Ok((x, None)),
            Err(e) => Err(e),
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(ScanTable { config: config.clone(), scan: spec, rows })
}
