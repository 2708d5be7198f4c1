//! Dynamics of two coupled optical cavities, each holding a single two-level
//! atom, restricted to the zero- and one-excitation subspace.
//!
//! The crate is `no_std` (it needs `alloc` for the numerical oracle). Modules:
//!
//! - [`system`]: physical parameters and every derived frequency.
//! - [`amplitudes`]: local and delocalized single-excitation amplitudes, and
//!   the qubit superposition that is to be moved from atom 1 to atom 2.
//! - [`exact`]: closed-form evolution in the delocalized basis.
//! - [`oracle`]: brute-force Hamiltonian matrices evolved by Hermitian
//!   eigendecomposition.
//! - [`effective`]: dispersive, resonant and near-resonant limit models.
//! - [`transfer`]: fidelity, transfer/entanglement times and regime labels.
//! - [`dynamics`]: a single front end over all of the above backends.
//! - [`analysis`]: peak finding and envelope fitting on sampled observables.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod amplitudes;
pub mod analysis;
pub mod dynamics;
pub mod effective;
mod error;
pub mod exact;
pub mod oracle;
pub mod system;
pub mod transfer;

pub use num_complex::Complex64;

pub use amplitudes::{DelocalizedAmplitudes, LocalAmplitudes, QubitState};
pub use dynamics::{Backend, Simulator};
pub use effective::{NearResonantBranch, RegimeKind, RegimeModel};
pub use error::{Error, Result};
pub use exact::ExactPropagator;
pub use oracle::{BasisState, EigenPropagator, HamiltonianMatrix};
pub use system::{Mode, SystemParams};
pub use transfer::{RegimeClassification, RegimeLabel, TransferReport};
