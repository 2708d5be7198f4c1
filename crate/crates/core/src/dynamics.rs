//! One interface over every evolution backend.

use core::fmt;
use core::str::FromStr;

use crate::amplitudes::LocalAmplitudes;
use crate::effective::{NearResonantBranch, RegimeKind, RegimeModel};
use crate::error::Result;
use crate::exact::ExactPropagator;
use crate::oracle::SingleExcitationOracle;
use crate::system::SystemParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Oracle,
    Dispersive,
    Resonant,
    NearResonant,
}

impl Backend {
    pub const ALL: [Backend; 5] =
        [Backend::Exact, Backend::Oracle, Backend::Dispersive, Backend::Resonant, Backend::NearResonant];

    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Oracle => "oracle",
            Backend::Dispersive => "dispersive",
            Backend::Resonant => "resonant",
            Backend::NearResonant => "near-resonant",
        }
    }

    fn regime(self) -> Option<RegimeKind> {
        match self {
            Backend::Dispersive => Some(RegimeKind::Dispersive),
            Backend::Resonant => Some(RegimeKind::Resonant),
            Backend::NearResonant => Some(RegimeKind::NearResonant),
            Backend::Exact | Backend::Oracle => None,
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownBackend;

impl fmt::Display for UnknownBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of: exact, oracle, dispersive, resonant, near-resonant")
    }
}

impl FromStr for Backend {
    type Err = UnknownBackend;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        Backend::ALL.into_iter().find(|b| b.as_str() == s).ok_or(UnknownBackend)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Engine {
    Exact(ExactPropagator),
    Oracle(SingleExcitationOracle),
    Effective(RegimeModel),
}

/// A backend bound to a parameter set, ready to evaluate amplitudes at any
/// time.
#[derive(Clone, Debug, PartialEq)]
pub struct Simulator {
    backend: Backend,
    engine: Engine,
}

impl Simulator {
    pub fn new(backend: Backend, params: SystemParams) -> Result<Self> {
        Self::with_branch(backend, params, NearResonantBranch::default())
    }

    /// `branch` only affects the resonant and near-resonant models.
    pub fn with_branch(backend: Backend, params: SystemParams, branch: NearResonantBranch) -> Result<Self> {
        let engine = match backend.regime() {
            None if backend == Backend::Exact => Engine::Exact(ExactPropagator::new(params)),
            None => Engine::Oracle(SingleExcitationOracle::new(params)?),
            Some(RegimeKind::Dispersive) => Engine::Effective(RegimeModel::dispersive(params)?),
            Some(kind) => Engine::Effective(RegimeModel::new(kind, params)?.with_branch(branch)?),
        };
        Ok(Self { backend, engine })
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn params(&self) -> &SystemParams {
        match &self.engine {
            Engine::Exact(p) => p.params(),
            Engine::Oracle(o) => o.params(),
            Engine::Effective(m) => m.params(),
        }
    }

    pub fn regime_model(&self) -> Option<&RegimeModel> {
        match &self.engine {
            Engine::Effective(m) => Some(m),
            _ => None,
        }
    }

    pub fn evolve(&self, init: &LocalAmplitudes, t: f64) -> Result<LocalAmplitudes> {
        match &self.engine {
            Engine::Exact(p) => p.evolve_local(init, t),
            Engine::Oracle(o) => o.evolve(init, t),
            Engine::Effective(m) => m.evolve(init, t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::system::Detuning;
    use num_complex::Complex64;

    #[test]
    fn names_round_trip() {
        for b in Backend::ALL {
            assert_eq!(b.as_str().parse::<Backend>(), Ok(b));
        }
        assert!("euler".parse::<Backend>().is_err());
    }

    #[test]
    fn all_backends_agree_at_time_zero() {
        let p = SystemParams::new(1.0, 100.1, 100.0, 1000.0).unwrap();
        let init = LocalAmplitudes::atom1(Complex64::new(0.0, 1.0));
        for b in Backend::ALL {
            let sim = Simulator::new(b, p).unwrap();
            assert!(sim.evolve(&init, 0.0).unwrap().max_deviation(&init) < 1e-14, "{b}");
        }
    }

    #[test]
    fn regime_mismatch_surfaces_as_domain_error() {
        let p = SystemParams::new(1.0, 100.0, 100.0, 1000.0).unwrap();
        let err = Simulator::new(Backend::Dispersive, p).unwrap_err();
        assert_eq!(err, Error::ResonantSingularity(Detuning::Delta2));
        assert!(err.is_domain_error());
    }
}
