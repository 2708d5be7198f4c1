//! `simulate` and `compare`.

use cavdimer_core::{Backend, LocalAmplitudes, Simulator};
use serde::Serialize;

use crate::config::{as_string, SimulationConfig};
use crate::error::CliResult;
use crate::series::{row, TimeSeries};

pub fn simulator(config: &SimulationConfig, model: Backend) -> CliResult<Simulator> {
    Ok(Simulator::with_branch(model, config.params()?, config.branch.into())?)
}

/// Evaluates the configured model on the uniform grid over `[0, t_max]`.
pub fn simulate(config: &SimulationConfig) -> CliResult<TimeSeries> {
    config.validate()?;
    let sim = simulator(config, config.model)?;
    let init = config.init.amplitudes();
    let ground = config.init.ground_population();
    let rows =
        config.times().into_iter().map(|t| Ok(row(t, &sim.evolve(&init, t)?, ground))).collect::<CliResult<_>>()?;
    Ok(TimeSeries { config: config.clone(), rows })
}

/// A note for stderr when an approximate model is asked for times past the
/// point where its neglected terms matter.
pub fn validity_warning(config: &SimulationConfig, model: Backend) -> Option<String> {
    let sim = simulator(config, model).ok()?;
    let horizon = sim.regime_model()?.validity_horizon()?;
    (config.horizon() > horizon).then(|| {
        format!(
            "warning: the {model} model neglects the off-resonant mode; t_max = {} exceeds its validity horizon {horizon:.4}",
            config.horizon()
        )
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub t_max: f64,
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FieldPopulations {
    pub model: f64,
    pub against: f64,
}

/// Deviation between two backends over the configured grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompareReport {
    pub config: SimulationConfig,
    #[serde(with = "as_string")]
    pub against: Backend,
    pub grid: Grid,
    /// Largest `||x| − |y||` over grid points and the four amplitudes.
    pub max_dev: f64,
    /// Root mean square of the same, over grid points and amplitudes.
    pub rms_dev: f64,
    /// Largest `|x − y|`, sensitive to phases as well.
    pub max_complex_dev: f64,
    /// `t_max g²/|Δ_far|`, with `Δ_far` the larger of `|Δ₁|`, `|Δ₂|`. The
    /// effective models hold while this is small.
    pub validity_indicator: Option<f64>,
    /// `(g/Δ_far)²`, the order of the field population the dispersive model
    /// leaves out.
    pub field_population_scale: Option<f64>,
    pub max_field_population: FieldPopulations,
}

pub fn compare(config: &SimulationConfig, against: Backend) -> CliResult<CompareReport> {
    config.validate()?;
    let params = config.params()?;
    let first = simulator(config, config.model)?;
    let second = simulator(config, against)?;
    let init = config.init.amplitudes();
    let (mut max_dev, mut sum_sq, mut max_complex_dev) = (0.0f64, 0.0, 0.0f64);
    let mut field = FieldPopulations { model: 0.0, against: 0.0 };
    let times = config.times();
    for &t in &times {
        let x: LocalAmplitudes = first.evolve(&init, t)?;
        let y = second.evolve(&init, t)?;
        for (u, v) in x.to_array().iter().zip(y.to_array()) {
            let dev = (u.norm() - v.norm()).abs();
            max_dev = max_dev.max(dev);
            sum_sq += dev * dev;
        }
        max_complex_dev = max_complex_dev.max(x.max_deviation(&y));
        field.model = field.model.max(x.field_population());
        field.against = field.against.max(y.field_population());
    }
    let (d1, d2) = params.detunings();
    let far = d1.abs().max(d2.abs());
    let g = params.g();
    Ok(CompareReport {
        config: config.clone(),
        against,
        grid: Grid { t_max: config.t_max, samples: config.samples },
        max_dev,
        rms_dev: (sum_sq / (4 * times.len()) as f64).sqrt(),
        max_complex_dev,
        validity_indicator: (far > 0.0).then(|| config.horizon() * g * g / far),
        field_population_scale: (far > 0.0).then(|| (g / far).powi(2)),
        max_field_population: field,
    })
}
