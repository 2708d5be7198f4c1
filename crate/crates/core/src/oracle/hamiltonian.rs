use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::system::SystemParams;

/// A product state `|atom₁, atom₂, n₁, n₂⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    pub atom1_excited: bool,
    pub atom2_excited: bool,
    pub n1: usize,
    pub n2: usize,
}

impl BasisState {
    pub const fn new(atom1_excited: bool, atom2_excited: bool, n1: usize, n2: usize) -> Self {
        Self { atom1_excited, atom2_excited, n1, n2 }
    }

    /// Excited atoms plus photons; conserved by the Hamiltonian.
    pub fn excitation_number(&self) -> usize {
        self.atom1_excited as usize + self.atom2_excited as usize + self.n1 + self.n2
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atom = |e: bool| if e { 'e' } else { 'g' };
        write!(f, "|{}{};{},{}>", atom(self.atom1_excited), atom(self.atom2_excited), self.n1, self.n2)
    }
}

/// Order of the four single-excitation states, matching `(a, b, c, d)`.
pub const SINGLE_EXCITATION_BASIS: [BasisState; 4] = [
    BasisState::new(false, false, 1, 0),
    BasisState::new(false, false, 0, 1),
    BasisState::new(true, false, 0, 0),
    BasisState::new(false, true, 0, 0),
];

/// Dense complex Hermitian matrix with a labelled basis, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianMatrix {
    dim: usize,
    entries: Vec<Complex64>,
    labels: Vec<BasisState>,
}

impl HamiltonianMatrix {
    /// The Hamiltonian restricted to the one-excitation subspace, in the basis
    /// [`SINGLE_EXCITATION_BASIS`].
    pub fn single_excitation(params: &SystemParams) -> Self {
        let (wf, wa) = (params.omega_f(), params.omega_a());
        let (g, hop) = (params.g(), params.hopping());
        let mut h = Self::zeros(SINGLE_EXCITATION_BASIS.to_vec());
        h.set_real(0, 0, wf);
        h.set_real(1, 1, wf);
        h.set_real(2, 2, wa);
        h.set_real(3, 3, wa);
        h.set_symmetric(0, 1, hop);
        h.set_symmetric(0, 2, g);
        h.set_symmetric(1, 3, g);
        h
    }

    /// The full Hamiltonian on `{g,e} ⊗ {g,e} ⊗ {0..n_max} ⊗ {0..n_max}`.
    ///
    /// Basis order: atom 1 slowest, then atom 2, then `n₁`, then `n₂`.
    pub fn fock(params: &SystemParams, n_max: usize) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::InvalidCutoff(n_max));
        }
        let levels = n_max + 1;
        let mut labels = Vec::with_capacity(4 * levels * levels);
        for atom1 in [false, true] {
            for atom2 in [false, true] {
                for n1 in 0..levels {
                    for n2 in 0..levels {
                        labels.push(BasisState::new(atom1, atom2, n1, n2));
                    }
                }
            }
        }
        let index = |s: &BasisState| {
            ((s.atom1_excited as usize * 2 + s.atom2_excited as usize) * levels + s.n1) * levels + s.n2
        };

        let (wf, wa) = (params.omega_f(), params.omega_a());
        let (g, hop) = (params.g(), params.hopping());
        let mut h = Self::zeros(labels);
        for i in 0..h.dim {
            let s = h.labels[i];
            let atoms = s.atom1_excited as usize + s.atom2_excited as usize;
            h.set_real(i, i, wa * atoms as f64 + wf * (s.n1 + s.n2) as f64);

            // g â σ̂₊: absorb a photon, excite the atom in the same cavity
            if !s.atom1_excited && s.n1 > 0 {
                let t = BasisState { atom1_excited: true, n1: s.n1 - 1, ..s };
                h.set_symmetric(index(&t), i, g * (s.n1 as f64).sqrt());
            }
            if !s.atom2_excited && s.n2 > 0 {
                let t = BasisState { atom2_excited: true, n2: s.n2 - 1, ..s };
                h.set_symmetric(index(&t), i, g * (s.n2 as f64).sqrt());
            }
            // A â₁†â₂: move a photon from cavity 2 to cavity 1
            if s.n2 > 0 && s.n1 < n_max {
                let t = BasisState { n1: s.n1 + 1, n2: s.n2 - 1, ..s };
                h.set_symmetric(index(&t), i, hop * (((s.n1 + 1) * s.n2) as f64).sqrt());
            }
        }
        Ok(h)
    }

    fn zeros(labels: Vec<BasisState>) -> Self {
        let dim = labels.len();
        Self { dim, entries: vec![Complex64::new(0.0, 0.0); dim * dim], labels }
    }

    fn set_real(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.dim + j] = Complex64::new(value, 0.0);
    }

    fn set_symmetric(&mut self, i: usize, j: usize, value: f64) {
        self.set_real(i, j, value);
        self.set_real(j, i, value);
    }

    pub(crate) fn from_parts(dim: usize, entries: Vec<Complex64>, labels: Vec<BasisState>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Self { dim, entries, labels }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn labels(&self) -> &[BasisState] {
        &self.labels
    }

    pub fn index_of(&self, state: &BasisState) -> Option<usize> {
        self.labels.iter().position(|s| s == state)
    }

    /// Restriction to the listed basis states, in the given order.
    pub fn restrict(&self, states: &[BasisState]) -> Option<Self> {
        let idx = states.iter().map(|s| self.index_of(s)).collect::<Option<Vec<_>>>()?;
        let n = idx.len();
        let mut entries = Vec::with_capacity(n * n);
        for &i in &idx {
            for &j in &idx {
                entries.push(self.get(i, j));
            }
        }
        Some(Self::from_parts(n, entries, states.to_vec()))
    }

    /// `max |H_ij − conj(H_ji)|`
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Largest entry of the commutator with the total excitation number,
    /// `max |H_ij (N_j − N_i)|`.
    pub fn excitation_commutator_norm(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            let ni = self.labels[i].excitation_number() as f64;
            for j in 0..self.dim {
                let nj = self.labels[j].excitation_number() as f64;
                worst = worst.max((self.get(i, j) * (nj - ni)).norm());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(self.entries.chunks_exact(self.dim).map(|row| row.iter().zip(v).map(|(h, x)| h * x).sum()).collect())
    }
}
