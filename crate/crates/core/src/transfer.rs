//! Qubit state transfer from atom 1 to atom 2.
//!
//! The qubit `cos θ |g⟩ + e^{iφ} sin θ |e⟩` starts in atom 1. Transfer is
//! perfect at time `τ` when `d(τ) = c(0)` and `a = b = c = 0`; the overlap with
//! the target state only depends on the transfer amplitude `T = d(τ)/c(0)`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::amplitudes::QubitState;
use crate::effective::NearResonantBranch;
use crate::error::{Error, Result};
use crate::system::SystemParams;

/// Default half-width accepted around an integer in the phase conditions.
pub const DEFAULT_TOLERANCE: f64 = 1e-3;
/// Default ratio standing in for "much greater than".
pub const DEFAULT_THRESHOLD: f64 = 10.0;

/// `|cos²θ + sin²θ · T|²`.
///
/// Phases only matter for superpositions: `T = −1` is a perfect population
/// transfer but gives zero fidelity at `θ = π/4`.
pub fn transfer_fidelity(qubit: &QubitState, transfer_amplitude: Complex64) -> f64 {
    let (s, c) = qubit.theta().sin_cos();
    (Complex64::new(c * c, 0.0) + transfer_amplitude * (s * s)).norm_sqr().min(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransferReport {
    pub time: f64,
    /// `|T|²`, the probability of finding atom 1's excitation in atom 2.
    pub transfer_probability: f64,
    pub fidelity: f64,
    /// `arg T` in `(−π, π]`; zero for a phase-correct transfer.
    pub phase_error: f64,
}

impl TransferReport {
    pub fn new(qubit: &QubitState, time: f64, transfer_amplitude: Complex64) -> Self {
        Self {
            time,
            transfer_probability: transfer_amplitude.norm_sqr(),
            fidelity: transfer_fidelity(qubit, transfer_amplitude),
            phase_error: transfer_amplitude.arg(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DispersiveTransferTime {
    pub n: usize,
    pub tau: f64,
    pub phase_ok: bool,
    /// Nearest integer solving the phase condition.
    pub m: i64,
    /// Distance, in units of the integer lattice, from the exact condition.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResonantTransferTime {
    pub n: usize,
    pub tau: f64,
    pub omega_condition_ok: bool,
    /// `ω_a = (2l + 1)g` (symmetric) or `ω_a = 2lg` (antisymmetric).
    pub l: i64,
    pub residual: f64,
}

fn dispersive_rate(params: &SystemParams) -> Result<(f64, f64)> {
    let g_disp = params.dispersive_coupling()?;
    let rate = g_disp * params.hopping();
    if rate == 0.0 {
        return Err(Error::InvalidParameter { name: "hopping", value: params.hopping() });
    }
    Ok((g_disp, rate))
}

/// Candidate times `τ_n = (2n + ½)π/|GA|` at which the dispersive model moves
/// the full population to atom 2, with the accompanying phase check.
///
/// `d(τ) = c(0)` additionally needs `(ω_a + GΔ)τ = (2m − ½s)π` where `s` is the
/// sign of `GA`. For `GA > 0` this is the usual `(2m − ½)π` condition, and
/// both hold together when `(ω_a + GΔ)/GA = (4m − 1)/(4n + 1)`.
pub fn dispersive_transfer_times(
    params: &SystemParams,
    n_max: usize,
    tolerance: f64,
) -> Result<Vec<DispersiveTransferTime>> {
    let (g_disp, rate) = dispersive_rate(params)?;
    let sign = rate.signum();
    let carrier = params.omega_a() + g_disp * params.detuning();
    Ok((0..=n_max)
        .map(|n| {
            let tau = (2.0 * n as f64 + 0.5) * PI / rate.abs();
            let x = (carrier * tau / PI + 0.5 * sign) / 2.0;
            let m = x.round();
            let residual = 2.0 * (x - m);
            DispersiveTransferTime { n, tau, phase_ok: residual.abs() <= tolerance, m: m as i64, residual }
        })
        .collect())
}

/// Times `(n + ½)π/(2|GA|)` at which the dispersive model leaves the
/// excitation equally shared between the atoms.
pub fn entanglement_times(params: &SystemParams, n_max: usize) -> Result<Vec<f64>> {
    let (_, rate) = dispersive_rate(params)?;
    Ok((0..=n_max).map(|n| (n as f64 + 0.5) * FRAC_PI_2 / rate.abs()).collect())
}

/// Transfer times `τ_n = (2n + 1)π/g` when the atoms are resonant with one
/// field mode, together with the condition that makes the phase right too.
///
/// At `τ_n` the resonant model gives `d = ∓c(0) e^{−iω_a τ_n}` with the upper
/// sign for the symmetric mode. So `d(τ) = c(0)` needs `ω_a = (2l + 1)g` on the
/// symmetric branch (`Δ ≈ A`) and `ω_a = 2lg` on the antisymmetric one
/// (`Δ ≈ −A`). `l` is the nearest integer and `residual` the distance from it.
pub fn resonant_transfer_times(
    params: &SystemParams,
    branch: NearResonantBranch,
    n_max: usize,
    tolerance: f64,
) -> Result<Vec<ResonantTransferTime>> {
    let g = params.g();
    if g == 0.0 {
        return Err(Error::InvalidParameter { name: "g", value: g });
    }
    let offset = match branch {
        NearResonantBranch::Symmetric => 0.5,
        NearResonantBranch::Antisymmetric => 0.0,
    };
    let x = params.omega_a() / (2.0 * g) - offset;
    let l = x.round();
    let residual = x - l;
    Ok((0..=n_max)
        .map(|n| ResonantTransferTime {
            n,
            tau: (2 * n + 1) as f64 * PI / g,
            omega_condition_ok: residual.abs() <= tolerance,
            l: l as i64,
            residual,
        })
        .collect())
}

/// `min(|Δ₁|, |Δ₂|)/g`: how far the atoms are from exact resonance with the
/// nearer field mode. The resonant transfer times assume this is small.
pub fn resonance_offset(params: &SystemParams) -> f64 {
    let (d1, d2) = params.detunings();
    d1.abs().min(d2.abs()) / params.g()
}

/// Picks the cavity frequency that makes both dispersive transfer conditions
/// hold exactly for the given `n` and `m`, keeping `g`, `A` and `Δ`.
pub fn tune_cavity_frequency(g: f64, hopping: f64, detuning: f64, n: usize, m: i64) -> Result<SystemParams> {
    let probe = SystemParams::new(g, hopping, detuning, 0.0)?;
    let (g_disp, rate) = dispersive_rate(&probe)?;
    let ratio = (4.0 * m as f64 - rate.signum()) / (4.0 * n as f64 + 1.0);
    let omega_a = ratio * rate.abs() - g_disp * detuning;
    SystemParams::new(g, hopping, detuning, omega_a - detuning)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegimeLabel {
    LargeHopping,
    LargeDetuning,
    NearResonance,
    Intermediate,
    Decoupled,
}

impl RegimeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            RegimeLabel::LargeHopping => "large-hopping",
            RegimeLabel::LargeDetuning => "large-detuning",
            RegimeLabel::NearResonance => "near-resonance",
            RegimeLabel::Intermediate => "intermediate",
            RegimeLabel::Decoupled => "decoupled",
        }
    }
}

impl core::fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegimeRatios {
    /// `|A| / max(|Δ|, g)`
    pub hopping: f64,
    /// `|Δ| / max(|A|, g)`
    pub detuning: f64,
    /// `(|Δ| + |A|) / max(min(|Δ₁|, |Δ₂|), g)`
    pub resonance: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegimeClassification {
    pub label: RegimeLabel,
    pub ratios: RegimeRatios,
}

fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        if num == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        num / den
    }
}

/// Labels the parameter set with the limit it sits in. A ratio of at least
/// `threshold` counts as "much greater".
///
/// Precedence: decoupled (`A = 0` or `g = 0`), then near resonance with one
/// delocalized mode, then large hopping or large detuning, else intermediate.
pub fn classify_regime(params: &SystemParams, threshold: f64) -> Result<RegimeClassification> {
    if !threshold.is_finite() || threshold <= 1.0 {
        return Err(Error::InvalidParameter { name: "threshold", value: threshold });
    }
    let g = params.g();
    let hop = params.hopping().abs();
    let det = params.detuning().abs();
    let (d1, d2) = params.detunings();
    let ratios = RegimeRatios {
        hopping: ratio(hop, det.max(g)),
        detuning: ratio(det, hop.max(g)),
        resonance: ratio(det + hop, d1.abs().min(d2.abs()).max(g)),
    };
    let label = if hop == 0.0 || g == 0.0 {
        RegimeLabel::Decoupled
    } else if ratios.resonance >= threshold {
        RegimeLabel::NearResonance
    } else if ratios.hopping >= threshold {
        RegimeLabel::LargeHopping
    } else if ratios.detuning >= threshold {
        RegimeLabel::LargeDetuning
    } else {
        RegimeLabel::Intermediate
    };
    Ok(RegimeClassification { label, ratios })
}
