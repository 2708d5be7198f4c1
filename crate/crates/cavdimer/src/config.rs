//! Run configuration: what to simulate, from which initial state, on which
//! grid. Serialized as the `config` echo in every JSON output and accepted
//! back through `--config`.

use std::fmt;
use std::str::FromStr;

use cavdimer_core::{Backend, Complex64, LocalAmplitudes, NearResonantBranch, QubitState, SystemParams};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Where the single excitation (or qubit) starts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InitialState {
    Atom1,
    Atom2,
    Cavity1,
    Cavity2,
    /// `cos θ |g⟩ + e^{iφ} sin θ |e⟩` in atom 1.
    Qubit(QubitState),
}

impl InitialState {
    /// Single-excitation amplitudes at `t = 0`.
    pub fn amplitudes(&self) -> LocalAmplitudes {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        match self {
            InitialState::Atom1 => LocalAmplitudes::new(zero, zero, one, zero),
            InitialState::Atom2 => LocalAmplitudes::new(zero, zero, zero, one),
            InitialState::Cavity1 => LocalAmplitudes::new(one, zero, zero, zero),
            InitialState::Cavity2 => LocalAmplitudes::new(zero, one, zero, zero),
            InitialState::Qubit(q) => q.initial_amplitudes(),
        }
    }

    /// Weight left in the ground state `|gg00⟩`, which never evolves.
    pub fn ground_population(&self) -> f64 {
        match self {
            InitialState::Qubit(q) => q.ground_amplitude().powi(2),
            _ => 0.0,
        }
    }
}

impl fmt::Display for InitialState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialState::Atom1 => f.write_str("atom1"),
            InitialState::Atom2 => f.write_str("atom2"),
            InitialState::Cavity1 => f.write_str("cav1"),
            InitialState::Cavity2 => f.write_str("cav2"),
            InitialState::Qubit(q) => write!(f, "{:?},{:?}", q.theta(), q.phi()),
        }
    }
}

impl FromStr for InitialState {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.trim() {
            "atom1" => Ok(InitialState::Atom1),
            "atom2" => Ok(InitialState::Atom2),
            "cav1" => Ok(InitialState::Cavity1),
            "cav2" => Ok(InitialState::Cavity2),
            other => {
                let bad = || {
                    CliError::Usage(format!(
                        "invalid initial state {other:?}: expected atom1, atom2, cav1, cav2 or theta,phi"
                    ))
                };
                let (theta, phi) = other.split_once(',').ok_or_else(bad)?;
                let theta: f64 = theta.trim().parse().map_err(|_| bad())?;
                let phi: f64 = phi.trim().parse().map_err(|_| bad())?;
                Ok(InitialState::Qubit(QubitState::new(theta, phi)?))
            }
        }
    }
}

/// Which delocalized mode the resonant models assume the atoms are tuned to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// The symmetric mode, `Δ ≈ A`.
    #[default]
    Symmetric,
    /// The antisymmetric mode, `Δ ≈ −A`.
    Antisymmetric,
}

impl From<Branch> for NearResonantBranch {
    fn from(b: Branch) -> Self {
        match b {
            Branch::Symmetric => NearResonantBranch::Symmetric,
            Branch::Antisymmetric => NearResonantBranch::Antisymmetric,
        }
    }
}

impl From<NearResonantBranch> for Branch {
    fn from(b: NearResonantBranch) -> Self {
        match b {
            NearResonantBranch::Symmetric => Branch::Symmetric,
            NearResonantBranch::Antisymmetric => Branch::Antisymmetric,
        }
    }
}

/// A complete simulation request.
///
/// `hopping`, `detuning`, `omega_f` and `t_max` are in units of `g` (and
/// `1/g`); output times are in absolute units, i.e. divided by `g`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationConfig {
    pub g: f64,
    pub hopping: f64,
    pub detuning: f64,
    pub omega_f: f64,
    #[serde(with = "as_string")]
    pub model: Backend,
    #[serde(default)]
    pub branch: Branch,
    #[serde(with = "as_string")]
    pub init: InitialState,
    pub t_max: f64,
    pub samples: usize,
}

impl Default for SimulationConfig {
    /// Large-hopping parameters: `A = 10g`, `Δ = 0.1g`, `ω_f = 1000g`.
    fn default() -> Self {
        Self {
            g: 1.0,
            hopping: 10.0,
            detuning: 0.1,
            omega_f: 1000.0,
            model: Backend::Oracle,
            branch: Branch::Symmetric,
            init: InitialState::Atom1,
            t_max: 40.0,
            samples: 2000,
        }
    }
}

impl SimulationConfig {
    pub fn validate(&self) -> CliResult<()> {
        if !(self.g.is_finite() && self.g > 0.0) {
            return Err(CliError::Usage(format!("--g must be positive, got {}", self.g)));
        }
        if !(self.t_max.is_finite() && self.t_max >= 0.0) {
            return Err(CliError::Usage(format!("--t-max must be finite and non-negative, got {}", self.t_max)));
        }
        if self.samples < 2 {
            return Err(CliError::Usage(format!("--samples must be at least 2, got {}", self.samples)));
        }
        self.params().map(|_| ())
    }

    /// Physical parameters in absolute units.
    pub fn params(&self) -> CliResult<SystemParams> {
        self.params_with_g(self.g)
    }

    /// Physical parameters with the coupling replaced by `g`, keeping the
    /// other frequencies fixed in absolute units.
    pub fn params_with_g(&self, g: f64) -> CliResult<SystemParams> {
        let unit = self.g;
        Ok(SystemParams::new(g, self.hopping * unit, self.detuning * unit, self.omega_f * unit)?)
    }

    /// Absolute length of the time window.
    pub fn horizon(&self) -> f64 {
        self.t_max / self.g
    }

    /// The uniform sampling times, in absolute units.
    pub fn times(&self) -> Vec<f64> {
        cavdimer_core::analysis::uniform_grid(self.horizon(), self.samples)
    }
}

/// Reads a configuration from JSON: either a bare config object or any
/// output document carrying a `config` field.
pub fn config_from_json(text: &str) -> CliResult<SimulationConfig> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let inner = match value.get("config") {
        Some(c) => c.clone(),
        None => value,
    };
    let config: SimulationConfig = serde_json::from_value(inner)?;
    config.validate()?;
    Ok(config)
}

/// Serde via `Display`/`FromStr`.
pub(crate) mod as_string {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_states_round_trip() {
        for s in ["atom1", "atom2", "cav1", "cav2", "0.7853981633974483,1.5"] {
            let init: InitialState = s.parse().unwrap();
            assert_eq!(init.to_string(), s);
        }
    }

    #[test]
    fn qubit_state_parses_with_spaces() {
        let init: InitialState = " 0.5 , 0 ".parse().unwrap();
        let InitialState::Qubit(q) = init else { panic!() };
        assert_eq!((q.theta(), q.phi()), (0.5, 0.0));
        assert!((init.ground_population() + init.amplitudes().norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bad_states_are_rejected() {
        for s in ["atom3", "1.0", "x,y", "2.0,0"] {
            assert!(s.parse::<InitialState>().is_err(), "{s}");
        }
    }

    #[test]
    fn config_json_round_trip() {
        let config = SimulationConfig { init: "0.3,0.2".parse().unwrap(), ..Default::default() };
        let text = serde_json::to_string(&config).unwrap();
        assert_eq!(config_from_json(&text).unwrap(), config);
        let wrapped = format!("{{\"config\":{text},\"rows\":[]}}");
        assert_eq!(config_from_json(&wrapped).unwrap(), config);
    }

    #[test]
    fn g_rescales_frequencies_and_times() {
        let config = SimulationConfig { g: 2.0, ..Default::default() };
        let p = config.params().unwrap();
        assert_eq!((p.g(), p.hopping(), p.detuning(), p.omega_f()), (2.0, 20.0, 0.2, 2000.0));
        assert_eq!(config.horizon(), 20.0);
    }

    #[test]
    fn validation() {
        assert!(SimulationConfig { samples: 1, ..Default::default() }.validate().is_err());
        assert!(SimulationConfig { t_max: -1.0, ..Default::default() }.validate().is_err());
        assert!(SimulationConfig { g: 0.0, ..Default::default() }.validate().is_err());
        assert!(SimulationConfig { t_max: 0.0, samples: 2, ..Default::default() }.validate().is_ok());
    }
}
