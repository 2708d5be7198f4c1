//! Physical parameters of the two-cavity system and the frequencies derived
//! from them.
//!
//! All frequencies share one unit; in practice everything is measured in units
//! of the atom-cavity coupling `g` (so `g = 1`) and times in units of `1/g`.

use core::fmt;

use crate::error::{Error, Result};

/// One of the two delocalized sectors.
///
/// Sector 1 is the antisymmetric combination of the local modes (field mode
/// frequency `ω_f − A`), sector 2 the symmetric one (`ω_f + A`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Antisymmetric,
    Symmetric,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Antisymmetric, Mode::Symmetric];

    pub fn from_index(j: usize) -> Result<Self> {
        match j {
            1 => Ok(Mode::Antisymmetric),
            2 => Ok(Mode::Symmetric),
            other => Err(Error::InvalidModeIndex(other)),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Mode::Antisymmetric => 1,
            Mode::Symmetric => 2,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Mode::Antisymmetric => Mode::Symmetric,
            Mode::Symmetric => Mode::Antisymmetric,
        }
    }
}

/// Names the delocalized detuning that made a formula singular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Detuning {
    /// `Δ₁ = Δ + A`
    Delta1,
    /// `Δ₂ = Δ − A`
    Delta2,
}

impl From<Mode> for Detuning {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Antisymmetric => Detuning::Delta1,
            Mode::Symmetric => Detuning::Delta2,
        }
    }
}

impl fmt::Display for Detuning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Detuning::Delta1 => f.write_str("delta_1 = detuning + hopping"),
            Detuning::Delta2 => f.write_str("delta_2 = detuning - hopping"),
        }
    }
}

/// Coupling `g`, hopping `A`, atom-field detuning `Δ` and bare cavity
/// frequency `ω_f`.
///
/// The atomic transition frequency is always `ω_f + Δ`; it is never stored.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams {
    g: f64,
    hopping: f64,
    detuning: f64,
    omega_f: f64,
}

impl SystemParams {
    /// Fails on non-finite inputs or a negative coupling. `g = 0` is accepted
    /// as a degenerate, uncoupled system.
    pub fn new(g: f64, hopping: f64, detuning: f64, omega_f: f64) -> Result<Self> {
        for (name, value) in [("g", g), ("hopping", hopping), ("detuning", detuning), ("omega_f", omega_f)] {
            if !value.is_finite() {
                return Err(Error::InvalidParameter { name, value });
            }
        }
        if g < 0.0 {
            return Err(Error::InvalidParameter { name: "g", value: g });
        }
        Ok(Self { g, hopping, detuning, omega_f })
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn hopping(&self) -> f64 {
        self.hopping
    }

    pub fn detuning(&self) -> f64 {
        self.detuning
    }

    pub fn omega_f(&self) -> f64 {
        self.omega_f
    }

    pub fn omega_a(&self) -> f64 {
        self.omega_f + self.detuning
    }

    /// `(Δ₁, Δ₂) = (Δ + A, Δ − A)`.
    pub fn detunings(&self) -> (f64, f64) {
        (self.detuning + self.hopping, self.detuning - self.hopping)
    }

    /// Detuning of the delocalized atomic mode from the field mode of the same
    /// sector.
    pub fn sector_detuning(&self, mode: Mode) -> f64 {
        let (d1, d2) = self.detunings();
        match mode {
            Mode::Antisymmetric => d1,
            Mode::Symmetric => d2,
        }
    }

    /// Frequency of the delocalized field mode: `ω_f − A` for sector 1 and
    /// `ω_f + A` for sector 2.
    pub fn field_mode_frequency(&self, mode: Mode) -> f64 {
        match mode {
            Mode::Antisymmetric => self.omega_f - self.hopping,
            Mode::Symmetric => self.omega_f + self.hopping,
        }
    }

    /// Generalized Rabi frequency `ν_j = √((Δ_j/2)² + g²)` of a sector.
    pub fn rabi_frequency(&self, mode: Mode) -> f64 {
        let half = 0.5 * self.sector_detuning(mode);
        half.hypot(self.g)
    }

    /// Index-based form of [`rabi_frequency`](Self::rabi_frequency); `j` must
    /// be 1 or 2.
    pub fn rabi_frequency_at(&self, j: usize) -> Result<f64> {
        Mode::from_index(j).map(|mode| self.rabi_frequency(mode))
    }

    /// Dimensionless dispersive coupling `G = g² / (Δ₁ Δ₂)`.
    ///
    /// Signed: negative whenever `|Δ| < |A|`. Singular when the atoms are
    /// resonant with either delocalized field mode.
    pub fn dispersive_coupling(&self) -> Result<f64> {
        let (d1, d2) = self.detunings();
        if d1 == 0.0 {
            return Err(Error::ResonantSingularity(Detuning::Delta1));
        }
        if d2 == 0.0 {
            return Err(Error::ResonantSingularity(Detuning::Delta2));
        }
        Ok(self.g * self.g / (d1 * d2))
    }

    /// Phase-rotation mismatch `δ = Δ₂/2 + g²/Δ₁` between the two delocalized
    /// atomic modes when the atoms are near resonance with field mode 2.
    pub fn beat_frequency(&self) -> Result<f64> {
        self.beat_frequency_for(Mode::Symmetric)
    }

    /// Beat frequency when the atoms are near resonance with `resonant`; the
    /// other sector contributes its dispersive Stark shift.
    pub fn beat_frequency_for(&self, resonant: Mode) -> Result<f64> {
        let near = self.sector_detuning(resonant);
        let far = self.sector_detuning(resonant.other());
        if far == 0.0 {
            return Err(Error::ResonantSingularity(resonant.other().into()));
        }
        Ok(0.5 * near + self.g * self.g / far)
    }

    /// The same system with every frequency multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.g * factor, self.hopping * factor, self.detuning * factor, self.omega_f * factor)
    }

    /// The same system with the sign of the atom-field detuning flipped.
    pub fn with_detuning(&self, detuning: f64) -> Result<Self> {
        Self::new(self.g, self.hopping, detuning, self.omega_f)
    }
}
