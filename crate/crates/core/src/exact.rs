//! Closed-form evolution of single-excitation states.
//!
//! In the delocalized basis the Hamiltonian splits into two independent
//! Jaynes-Cummings sectors. Sector `j` rotates at the mean frequency
//! `ω_a − Δ_j/2` and exchanges amplitude between `α_j` and `β_j` at the
//! generalized Rabi frequency `ν_j`:
//!
//! ```text
//! α_j(t) = e^{−i(ω_a − Δ_j/2)t} [α_j(0) cos ν_j t + (i/ν_j)(Δ_j/2 α_j(0) − g β_j(0)) sin ν_j t]
//! β_j(t) = e^{−i(ω_a − Δ_j/2)t} [β_j(0) cos ν_j t − (i/ν_j)(Δ_j/2 β_j(0) + g α_j(0)) sin ν_j t]
//! ```
//!
//! Phases are kept in the laboratory frame.

use num_complex::Complex64;

use crate::amplitudes::{DelocalizedAmplitudes, LocalAmplitudes};
use crate::error::{Error, Result};
use crate::system::{Mode, SystemParams};

#[derive(Clone, Copy, Debug, PartialEq)]
struct Sector {
    mode: Mode,
    /// `Δ_j / 2`
    half_detuning: f64,
    /// `ν_j`
    rabi: f64,
    /// `ω_a − Δ_j / 2`
    carrier: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExactPropagator {
    params: SystemParams,
    g: f64,
    sectors: [Sector; 2],
}

impl ExactPropagator {
    pub fn new(params: SystemParams) -> Self {
        let sector = |mode| {
            let half_detuning = 0.5 * params.sector_detuning(mode);
            Sector { mode, half_detuning, rabi: params.rabi_frequency(mode), carrier: params.omega_a() - half_detuning }
        };
        Self { params, g: params.g(), sectors: [sector(Mode::Antisymmetric), sector(Mode::Symmetric)] }
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn evolve(&self, init: &DelocalizedAmplitudes, t: f64) -> Result<DelocalizedAmplitudes> {
        if !t.is_finite() || !init.is_finite() {
            return Err(Error::NonFinite);
        }
        let mut out = *init;
        for sector in &self.sectors {
            out.set_sector(sector.mode, self.evolve_sector(sector, init.sector(sector.mode), t));
        }
        Ok(out)
    }

    /// Local-basis wrapper: delocalize, evolve, transform back.
    pub fn evolve_local(&self, init: &LocalAmplitudes, t: f64) -> Result<LocalAmplitudes> {
        self.evolve(&init.to_delocalized(), t).map(|d| d.to_local())
    }

    fn evolve_sector(&self, s: &Sector, (alpha, beta): (Complex64, Complex64), t: f64) -> (Complex64, Complex64) {
        let phase = Complex64::from_polar(1.0, -s.carrier * t);
        let (sin, cos) = (s.rabi * t).sin_cos();
        // ν_j ≥ g; only the fully degenerate g = Δ_j = 0 sector has ν_j = 0,
        // where sin(ν t)/ν → t.
        let sinc = if s.rabi == 0.0 { t } else { sin / s.rabi };
        let i = Complex64::i();
        let alpha_t = alpha * cos + i * (alpha * s.half_detuning - beta * self.g) * sinc;
        let beta_t = beta * cos - i * (beta * s.half_detuning + alpha * self.g) * sinc;
        (phase * alpha_t, phase * beta_t)
    }
}
