//! Single-excitation state representations.
//!
//! Local basis order is `[|gg10⟩, |gg01⟩, |eg00⟩, |ge00⟩]` with amplitudes
//! `(a, b, c, d)`: a photon in cavity 1, a photon in cavity 2, atom 1 excited,
//! atom 2 excited.
//!
//! The delocalized amplitudes are defined without the `1/√2` of the mode
//! operators, `α_j = a + (−1)^j b` and `β_j = c + (−1)^j d`, so their squared
//! magnitudes sum to twice the local weight.

use core::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::system::Mode;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LocalAmplitudes {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl LocalAmplitudes {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self { a, b, c, d }
    }

    /// Excitation in atom 1 with amplitude `c`.
    pub fn atom1(c: Complex64) -> Self {
        Self { c, ..Self::default() }
    }

    pub fn from_array([a, b, c, d]: [Complex64; 4]) -> Self {
        Self { a, b, c, d }
    }

    pub fn to_array(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn to_delocalized(&self) -> DelocalizedAmplitudes {
        DelocalizedAmplitudes {
            alpha1: self.a - self.b,
            alpha2: self.a + self.b,
            beta1: self.c - self.d,
            beta2: self.c + self.d,
        }
    }

    /// Total single-excitation weight `|a|² + |b|² + |c|² + |d|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.to_array().iter().map(|z| z.norm_sqr()).sum()
    }

    /// `|a|² + |b|²`
    pub fn field_population(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    /// `|c|² + |d|²`
    pub fn atomic_population(&self) -> f64 {
        self.c.norm_sqr() + self.d.norm_sqr()
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest `|x − y|` over the four amplitudes.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        self.to_array().iter().zip(other.to_array()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    /// Largest `||x| − |y||` over the four amplitudes; ignores phases.
    pub fn max_magnitude_deviation(&self, other: &Self) -> f64 {
        self.to_array().iter().zip(other.to_array()).map(|(x, y)| (x.norm() - y.norm()).abs()).fold(0.0, f64::max)
    }
}

impl From<DelocalizedAmplitudes> for LocalAmplitudes {
    fn from(deloc: DelocalizedAmplitudes) -> Self {
        deloc.to_local()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DelocalizedAmplitudes {
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub beta1: Complex64,
    pub beta2: Complex64,
}

impl DelocalizedAmplitudes {
    pub fn to_local(&self) -> LocalAmplitudes {
        LocalAmplitudes {
            a: (self.alpha2 + self.alpha1) * 0.5,
            b: (self.alpha2 - self.alpha1) * 0.5,
            c: (self.beta2 + self.beta1) * 0.5,
            d: (self.beta2 - self.beta1) * 0.5,
        }
    }

    /// `(α_j, β_j)` for one sector.
    pub fn sector(&self, mode: Mode) -> (Complex64, Complex64) {
        match mode {
            Mode::Antisymmetric => (self.alpha1, self.beta1),
            Mode::Symmetric => (self.alpha2, self.beta2),
        }
    }

    pub fn set_sector(&mut self, mode: Mode, (alpha, beta): (Complex64, Complex64)) {
        match mode {
            Mode::Antisymmetric => {
                self.alpha1 = alpha;
                self.beta1 = beta;
            }
            Mode::Symmetric => {
                self.alpha2 = alpha;
                self.beta2 = beta;
            }
        }
    }

    /// `|α₁|² + |α₂|² + |β₁|² + |β₂|²`, twice the local weight.
    pub fn norm_sqr(&self) -> f64 {
        [self.alpha1, self.alpha2, self.beta1, self.beta2].iter().map(|z| z.norm_sqr()).sum()
    }

    /// Population of the delocalized field mode of a sector, `|α_j|²/2`.
    pub fn field_mode_population(&self, mode: Mode) -> f64 {
        0.5 * self.sector(mode).0.norm_sqr()
    }

    pub fn is_finite(&self) -> bool {
        [self.alpha1, self.alpha2, self.beta1, self.beta2].iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl From<LocalAmplitudes> for DelocalizedAmplitudes {
    fn from(local: LocalAmplitudes) -> Self {
        local.to_delocalized()
    }
}

/// Qubit `cos θ |g⟩ + e^{iφ} sin θ |e⟩` prepared in atom 1, with atom 2 in
/// its ground state and both cavities empty.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitState {
    theta: f64,
    phi: f64,
}

impl QubitState {
    /// Requires `0 ≤ θ ≤ π/2` and `0 ≤ φ < 2π`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(Error::InvalidParameter { name: "theta", value: theta });
        }
        if !(0.0..TAU).contains(&phi) {
            return Err(Error::InvalidParameter { name: "phi", value: phi });
        }
        Ok(Self { theta, phi })
    }

    /// Atom 1 fully excited.
    pub fn excited() -> Self {
        Self { theta: FRAC_PI_2, phi: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Amplitude of the untouched zero-excitation component, `cos θ`.
    pub fn ground_amplitude(&self) -> f64 {
        self.theta.cos()
    }

    /// `c(0) = e^{iφ} sin θ`.
    pub fn excited_amplitude(&self) -> Complex64 {
        Complex64::from_polar(self.theta.sin(), self.phi)
    }

    /// Single-excitation part of the initial state: `a = b = d = 0`,
    /// `c = e^{iφ} sin θ`.
    pub fn initial_amplitudes(&self) -> LocalAmplitudes {
        LocalAmplitudes::atom1(self.excited_amplitude())
    }
}
