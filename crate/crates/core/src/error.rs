use core::fmt;

use crate::effective::RegimeKind;
use crate::system::Detuning;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A physical parameter is outside its allowed range.
    InvalidParameter {
        name: &'static str,
        value: f64,
    },
    /// Delocalized mode index other than 1 or 2.
    InvalidModeIndex(usize),
    /// A detuning that appears in a denominator is exactly zero.
    ResonantSingularity(Detuning),
    /// Time or amplitude input is NaN or infinite.
    NonFinite,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Photon cutoff below one.
    InvalidCutoff(usize),
    WrongRegime {
        expected: RegimeKind,
        found: RegimeKind,
    },
    /// The closed-form model only covers `a(0) = b(0) = d(0) = 0`.
    UnsupportedInitialState,
    /// Jacobi sweeps did not reach the off-diagonal tolerance.
    NoConvergence {
        sweeps: usize,
    },
}

impl Error {
    /// True for errors caused by asking a model to run outside the regime
    /// where its formula exists, as opposed to malformed input.
    pub fn is_domain_error(&self) -> bool {
        matches!(self, Error::ResonantSingularity(_) | Error::WrongRegime { .. } | Error::UnsupportedInitialState)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, value } => {
                write!(f, "invalid value {value} for parameter `{name}`")
            }
            Error::InvalidModeIndex(j) => write!(f, "mode index must be 1 or 2, got {j}"),
            Error::ResonantSingularity(which) => {
                write!(f, "{which} is zero: atoms are resonant with a delocalized mode and the formula is singular")
            }
            Error::NonFinite => write!(f, "non-finite time or amplitude"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "state has dimension {found}, expected {expected}")
            }
            Error::InvalidCutoff(n) => write!(f, "photon cutoff must be at least 1, got {n}"),
            Error::WrongRegime { expected, found } => {
                write!(f, "operation needs a {expected} model, got {found}")
            }
            Error::UnsupportedInitialState => {
                write!(f, "model only supports an initial excitation in atom 1 (a = b = d = 0)")
            }
            Error::NoConvergence { sweeps } => {
                write!(f, "eigensolver did not converge after {sweeps} sweeps")
            }
        }
    }
}

impl core::error::Error for Error {}
