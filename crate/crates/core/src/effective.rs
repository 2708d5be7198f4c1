//! Closed-form dynamics of the limiting regimes.
//!
//! - **Dispersive** (large hopping or large detuning): no atom-field exchange;
//!   the field hops between cavities at rate `A` and the excitation hops
//!   between atoms at rate `GA`, `G = g²/(Δ₁Δ₂)`. One propagator covers both
//!   limits.
//! - **Resonant**: the atoms sit exactly on one delocalized field mode and the
//!   excitation passes atom → field → atom at rate `g`.
//! - **Near-resonant**: as above, plus the detuning `Δ_r` from the resonant
//!   mode and the Stark shift `g²/Δ_s` from the far mode. Their sum `δ` beats
//!   against the fast oscillation at `g + Δ_r²/8g`.
//!
//! The resonant and near-resonant formulas only hold for an initial
//! excitation in atom 1 with empty cavities.

use core::fmt;

use num_complex::Complex64;

use crate::amplitudes::LocalAmplitudes;
use crate::error::{Error, Result};
use crate::oracle::SingleExcitationOracle;
use crate::system::{Detuning, Mode, SystemParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegimeKind {
    Dispersive,
    Resonant,
    NearResonant,
}

impl fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegimeKind::Dispersive => "dispersive",
            RegimeKind::Resonant => "resonant",
            RegimeKind::NearResonant => "near-resonant",
        })
    }
}

/// Which delocalized field mode the atoms are (nearly) resonant with.
///
/// `Symmetric` (mode 2, `Δ ≈ A`) is the usual positive-detuning case;
/// `Antisymmetric` (mode 1, `Δ ≈ −A`) is its negative-detuning mirror image,
/// obtained by exchanging the roles of the two sectors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NearResonantBranch {
    #[default]
    Symmetric,
    Antisymmetric,
}

impl NearResonantBranch {
    pub fn resonant_mode(self) -> Mode {
        match self {
            NearResonantBranch::Symmetric => Mode::Symmetric,
            NearResonantBranch::Antisymmetric => Mode::Antisymmetric,
        }
    }

    /// Branch whose field mode the atoms are closer to.
    pub fn nearest(params: &SystemParams) -> Self {
        let (d1, d2) = params.detunings();
        if d1.abs() < d2.abs() {
            NearResonantBranch::Antisymmetric
        } else {
            NearResonantBranch::Symmetric
        }
    }

    /// Sign carried by `b` and `d`: the symmetric mode populates both cavities
    /// (atoms) in phase, the antisymmetric one out of phase.
    pub(crate) fn parity(self) -> f64 {
        match self {
            NearResonantBranch::Symmetric => 1.0,
            NearResonantBranch::Antisymmetric => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegimeModel {
    kind: RegimeKind,
    params: SystemParams,
    branch: NearResonantBranch,
    stark_shift: bool,
    /// `G`, dispersive only.
    coupling: f64,
    /// `δ`; zero for the resonant model.
    beat: f64,
    /// Fast oscillation rate `g + Δ_r²/8g`; `g` for the resonant model.
    fast_rate: f64,
}

impl RegimeModel {
    pub fn new(kind: RegimeKind, params: SystemParams) -> Result<Self> {
        Self::build(kind, params, NearResonantBranch::default(), true)
    }

    pub fn dispersive(params: SystemParams) -> Result<Self> {
        Self::new(RegimeKind::Dispersive, params)
    }

    pub fn resonant(params: SystemParams) -> Result<Self> {
        Self::new(RegimeKind::Resonant, params)
    }

    pub fn near_resonant(params: SystemParams) -> Result<Self> {
        Self::new(RegimeKind::NearResonant, params)
    }

    /// Switch to the negative-detuning mirror (or back).
    pub fn with_branch(self, branch: NearResonantBranch) -> Result<Self> {
        Self::build(self.kind, self.params, branch, self.stark_shift)
    }

    /// Drop the `g²/Δ_s` Stark term from `δ` (near-resonant only). With
    /// `Δ_r = 0` this reproduces the resonant model exactly.
    pub fn without_stark_shift(self) -> Result<Self> {
        Self::build(self.kind, self.params, self.branch, false)
    }

    fn build(kind: RegimeKind, params: SystemParams, branch: NearResonantBranch, stark_shift: bool) -> Result<Self> {
        let g = params.g();
        let resonant = branch.resonant_mode();
        let (coupling, beat, fast_rate) = match kind {
            RegimeKind::Dispersive => (params.dispersive_coupling()?, 0.0, 0.0),
            RegimeKind::Resonant => (0.0, 0.0, g),
            RegimeKind::NearResonant => {
                if g == 0.0 {
                    return Err(Error::InvalidParameter { name: "g", value: g });
                }
                let near = params.sector_detuning(resonant);
                let far = params.sector_detuning(resonant.other());
                if far == 0.0 {
                    return Err(Error::ResonantSingularity(Detuning::from(resonant.other())));
                }
                let beat = if stark_shift { params.beat_frequency_for(resonant)? } else { 0.5 * near };
                (0.0, beat, g + near * near / (8.0 * g))
            }
        };
        Ok(Self { kind, params, branch, stark_shift, coupling, beat, fast_rate })
    }

    pub fn kind(&self) -> RegimeKind {
        self.kind
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn branch(&self) -> NearResonantBranch {
        self.branch
    }

    /// `G` for the dispersive model.
    pub fn dispersive_coupling(&self) -> Option<f64> {
        (self.kind == RegimeKind::Dispersive).then_some(self.coupling)
    }

    /// `δ` for the resonant (always 0) and near-resonant models.
    pub fn beat_frequency(&self) -> Option<f64> {
        (self.kind != RegimeKind::Dispersive).then_some(self.beat)
    }

    /// `g + Δ_r²/8g` for the near-resonant model, `g` for the resonant one.
    pub fn fast_rate(&self) -> Option<f64> {
        (self.kind != RegimeKind::Dispersive).then_some(self.fast_rate)
    }

    /// Time beyond which the neglected far-mode dispersive processes start to
    /// matter, `0.1 |Δ_s|/g²`. Only defined for the resonant models.
    pub fn validity_horizon(&self) -> Option<f64> {
        if self.kind == RegimeKind::Dispersive {
            return None;
        }
        let g = self.params.g();
        let far = self.params.sector_detuning(self.branch.resonant_mode().other());
        (g != 0.0 && far != 0.0).then(|| 0.1 * far.abs() / (g * g))
    }

    /// True when `t` exceeds [`validity_horizon`](Self::validity_horizon).
    pub fn beyond_validity(&self, t: f64) -> bool {
        self.validity_horizon().is_some_and(|h| t.abs() > h)
    }

    /// Dispatches on the model kind. Resonant models accept only states of the
    /// form `c ≠ 0, a = b = d = 0`.
    pub fn evolve(&self, init: &LocalAmplitudes, t: f64) -> Result<LocalAmplitudes> {
        if !t.is_finite() || !init.is_finite() {
            return Err(Error::NonFinite);
        }
        match self.kind {
            RegimeKind::Dispersive => self.evolve_dispersive(init, t),
            RegimeKind::Resonant | RegimeKind::NearResonant => {
                let zero = Complex64::new(0.0, 0.0);
                if init.a != zero || init.b != zero || init.d != zero {
                    return Err(Error::UnsupportedInitialState);
                }
                if self.kind == RegimeKind::Resonant {
                    self.evolve_resonant(init.c, t)
                } else {
                    self.evolve_near_resonant(init.c, t)
                }
            }
        }
    }

    /// Field pair rotating at `ω_f − GΔ` and hopping at rate `A`; atomic pair
    /// rotating at `ω_a + GΔ` and hopping at rate `GA`. `G` keeps its sign.
    pub fn evolve_dispersive(&self, init: &LocalAmplitudes, t: f64) -> Result<LocalAmplitudes> {
        self.expect(RegimeKind::Dispersive)?;
        let p = &self.params;
        let g_delta = self.coupling * p.detuning();
        let field_phase = Complex64::from_polar(1.0, -(p.omega_f() - g_delta) * t);
        let atom_phase = Complex64::from_polar(1.0, -(p.omega_a() + g_delta) * t);
        let i = Complex64::i();

        let (sf, cf) = (p.hopping() * t).sin_cos();
        let (sa, ca) = (self.coupling * p.hopping() * t).sin_cos();
        Ok(LocalAmplitudes {
            a: field_phase * (init.a * cf - i * init.b * sf),
            b: field_phase * (init.b * cf - i * init.a * sf),
            c: atom_phase * (init.c * ca - i * init.d * sa),
            d: atom_phase * (init.d * ca - i * init.c * sa),
        })
    }

    /// `a = b = −(i c₀/2) e^{−iω_a t} sin gt`, `c = c₀ e^{−iω_a t} cos²(gt/2)`,
    /// `d = −c₀ e^{−iω_a t} sin²(gt/2)`. On the antisymmetric branch `b` and
    /// `d` change sign, so there `d = +c₀ e^{−iω_a t} sin²(gt/2)`.
    pub fn evolve_resonant(&self, init_c: Complex64, t: f64) -> Result<LocalAmplitudes> {
        self.expect(RegimeKind::Resonant)?;
        let p = &self.params;
        let phase = init_c * Complex64::from_polar(1.0, -p.omega_a() * t);
        let (s_half, c_half) = (0.5 * p.g() * t).sin_cos();
        let parity = self.branch.parity();
        let a = -Complex64::i() * phase * (0.5 * (p.g() * t).sin());
        Ok(LocalAmplitudes { a, b: a * parity, c: phase * (c_half * c_half), d: phase * (-parity * s_half * s_half) })
    }

    /// Beating solution. The common phase `e^{−i(ω_a − Δ_r/2)t}` equals
    /// `e^{−i(ω_f + Δ₁/2)t}` on the symmetric branch.
    pub fn evolve_near_resonant(&self, init_c: Complex64, t: f64) -> Result<LocalAmplitudes> {
        self.expect(RegimeKind::NearResonant)?;
        let p = &self.params;
        let near = p.sector_detuning(self.branch.resonant_mode());
        let phase = init_c * Complex64::from_polar(1.0, -(p.omega_a() - 0.5 * near) * t);
        let (sin, cos) = (self.fast_rate * t).sin_cos();
        let beat = Complex64::from_polar(1.0, -self.beat * t);
        let parity = self.branch.parity();
        let a = -Complex64::i() * phase * (0.5 * sin);
        Ok(LocalAmplitudes {
            a,
            b: a * parity,
            c: phase * (beat + cos) * 0.5,
            d: phase * (cos - beat) * (0.5 * parity),
        })
    }

    fn expect(&self, kind: RegimeKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::WrongRegime { expected: kind, found: self.kind })
        }
    }
}

/// Largest per-amplitude magnitude deviation `||x_model| − |x_oracle||` over a
/// time grid, against the numerical one-excitation oracle.
pub fn model_error(model: &RegimeModel, init: &LocalAmplitudes, t_grid: &[f64]) -> Result<f64> {
    let oracle = SingleExcitationOracle::new(*model.params())?;
    let mut worst = 0.0f64;
    for &t in t_grid {
        let approx = model.evolve(init, t)?;
        let reference = oracle.evolve(init, t)?;
        worst = worst.max(approx.max_magnitude_deviation(&reference));
    }
    Ok(worst)
}
