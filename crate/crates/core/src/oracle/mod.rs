//! Brute-force reference dynamics: the Hamiltonian written out as a dense
//! matrix and evolved through its eigendecomposition.
//!
//! This path shares nothing with the closed-form solution in
//! [`exact`](crate::exact) beyond [`SystemParams`], so each checks the other.

mod eigen;
mod hamiltonian;

use alloc::vec::Vec;

pub use eigen::EigenPropagator;
pub use hamiltonian::{BasisState, HamiltonianMatrix, SINGLE_EXCITATION_BASIS};

use num_complex::Complex64;

use crate::amplitudes::LocalAmplitudes;
use crate::error::Result;
use crate::system::SystemParams;

/// Numerical evolution of the 4×4 one-excitation block.
#[derive(Clone, Debug, PartialEq)]
pub struct SingleExcitationOracle {
    params: SystemParams,
    propagator: EigenPropagator,
}

impl SingleExcitationOracle {
    pub fn new(params: SystemParams) -> Result<Self> {
        let h = HamiltonianMatrix::single_excitation(&params);
        Ok(Self { params, propagator: EigenPropagator::new(&h)? })
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn propagator(&self) -> &EigenPropagator {
        &self.propagator
    }

    pub fn evolve(&self, init: &LocalAmplitudes, t: f64) -> Result<LocalAmplitudes> {
        let out = self.propagator.evolve(&init.to_array(), t)?;
        Ok(LocalAmplitudes::from_array([out[0], out[1], out[2], out[3]]))
    }
}

/// Total population in each excitation-number block of a Fock-space state.
pub fn block_populations(h: &HamiltonianMatrix, state: &[Complex64]) -> Vec<f64> {
    let top = h.labels().iter().map(BasisState::excitation_number).max().unwrap_or(0);
    let mut out = alloc::vec![0.0; top + 1];
    for (label, z) in h.labels().iter().zip(state) {
        out[label.excitation_number()] += z.norm_sqr();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::ExactPropagator;
    use alloc::vec;
    use core::f64::consts::PI;
    use proptest::prelude::*;

    const ONE: Complex64 = Complex64::new(1.0, 0.0);

    fn params(g: f64, hopping: f64, detuning: f64, omega_f: f64) -> SystemParams {
        SystemParams::new(g, hopping, detuning, omega_f).unwrap()
    }

    #[test]
    fn single_excitation_matrix_layout() {
        let h = HamiltonianMatrix::single_excitation(&params(1.0, 10.0, 0.1, 1000.0));
        let diag: Vec<f64> = (0..4).map(|i| h.get(i, i).re).collect();
        assert_eq!(diag, vec![1000.0, 1000.0, 1000.1, 1000.1]);
        assert_eq!(h.get(0, 1).re, 10.0);
        assert_eq!(h.get(0, 2).re, 1.0);
        assert_eq!(h.get(1, 3).re, 1.0);
        assert_eq!(h.get(2, 3).re, 0.0);
        assert_eq!(h.get(0, 3).re, 0.0);
        assert_eq!(h.hermiticity_error(), 0.0);
    }

    #[test]
    fn uncoupled_matrix_is_diagonal() {
        let h = HamiltonianMatrix::single_excitation(&params(0.0, 0.0, 0.3, 7.0));
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(h.get(i, j).norm(), 0.0);
                }
            }
        }
    }

    #[test]
    fn resonant_sector_shows_polariton_splitting() {
        // Δ₂ = 0: the symmetric sector is the 2×2 block [[ω_a, g], [g, ω_a]]
        let p = params(1.0, 100.0, 100.0, 1000.0);
        let eig = EigenPropagator::new(&HamiltonianMatrix::single_excitation(&p)).unwrap();
        let wa = p.omega_a();
        for target in [wa - 1.0, wa + 1.0] {
            assert!(eig.eigenvalues().iter().any(|l| (l - target).abs() < 1e-10), "{target}");
        }
    }

    #[test]
    fn fock_dimension_and_consistency() {
        let p = params(0.7, 3.0, -1.2, 50.0);
        for n_max in 1..=4 {
            let h = HamiltonianMatrix::fock(&p, n_max).unwrap();
            assert_eq!(h.dim(), 4 * (n_max + 1) * (n_max + 1));
            assert_eq!(h.hermiticity_error(), 0.0);
            assert_eq!(h.excitation_commutator_norm(), 0.0);
            let block = h.restrict(&SINGLE_EXCITATION_BASIS).unwrap();
            assert_eq!(block.entries(), HamiltonianMatrix::single_excitation(&p).entries());
        }
        assert_eq!(HamiltonianMatrix::fock(&p, 0), Err(Error::InvalidCutoff(0)));
    }

    #[test]
    fn fock_basis_order_is_documented_order() {
        let h = HamiltonianMatrix::fock(&params(1.0, 1.0, 0.0, 10.0), 1).unwrap();
        let labels = h.labels();
        assert_eq!(labels[0], BasisState::new(false, false, 0, 0));
        assert_eq!(labels[1], BasisState::new(false, false, 0, 1));
        assert_eq!(labels[2], BasisState::new(false, false, 1, 0));
        assert_eq!(labels[4], BasisState::new(false, true, 0, 0));
        assert_eq!(labels[8], BasisState::new(true, false, 0, 0));
    }

    #[test]
    fn fock_matrix_has_bosonic_factors() {
        let p = params(0.5, 2.0, 0.0, 10.0);
        let h = HamiltonianMatrix::fock(&p, 3).unwrap();
        let from = h.index_of(&BasisState::new(false, false, 2, 1)).unwrap();
        // â₁†â₂: |2,1⟩ → √3·√1 |3,0⟩
        let to = h.index_of(&BasisState::new(false, false, 3, 0)).unwrap();
        assert!((h.get(to, from).re - 2.0 * 3f64.sqrt()).abs() < 1e-14);
        // â₁σ̂₁₊: |g;2⟩ → √2 |e;1⟩
        let to = h.index_of(&BasisState::new(true, false, 1, 1)).unwrap();
        assert!((h.get(to, from).re - 0.5 * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn evolution_at_zero_is_identity_and_rejects_bad_dimension() {
        let oracle = SingleExcitationOracle::new(params(1.0, 10.0, 0.1, 1000.0)).unwrap();
        let init = LocalAmplitudes::atom1(ONE);
        assert!(oracle.evolve(&init, 0.0).unwrap().max_deviation(&init) < 1e-14);
        assert_eq!(oracle.propagator().evolve(&[ONE; 3], 1.0), Err(Error::DimensionMismatch { expected: 4, found: 3 }));
    }

    #[test]
    fn resonant_transfer_near_pi() {
        // frozen from an independent numpy eigh evolution
        let oracle = SingleExcitationOracle::new(params(1.0, 100.0, 100.0, 1000.0)).unwrap();
        let out = oracle.evolve(&LocalAmplitudes::atom1(ONE), PI).unwrap();
        assert!((out.d.norm_sqr() - 0.999_938_313).abs() < 1e-8);
    }

    #[test]
    fn matches_exact_solution_on_reference_parameters() {
        for (hop, det) in [(10.0, 0.1), (100.0, 100.0), (100.1, 100.0)] {
            let p = params(1.0, hop, det, 1000.0);
            let oracle = SingleExcitationOracle::new(p).unwrap();
            let exact = ExactPropagator::new(p);
            let init = LocalAmplitudes::atom1(ONE);
            for k in 0..=200 {
                let t = 0.5 * k as f64;
                let dev = oracle.evolve(&init, t).unwrap().max_deviation(&exact.evolve_local(&init, t).unwrap());
                assert!(dev < 1e-10, "hop={hop} t={t} dev={dev}");
            }
        }
    }

    fn random_params() -> impl Strategy<Value = SystemParams> {
        (0.1f64..3.0, -50.0f64..50.0, -50.0f64..50.0, 0.0f64..100.0).prop_map(|(g, a, d, wf)| params(g, a, d, wf))
    }

    fn random_state(dim: usize) -> impl Strategy<Value = Vec<Complex64>> {
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim).prop_map(|v| {
            let z: Vec<Complex64> = v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect();
            let norm = z.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt().max(1e-12);
            z.into_iter().map(|x| x / norm).collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn decomposition_reconstructs_hamiltonian(p in random_params(), n_max in 1usize..=3) {
            let h = HamiltonianMatrix::fock(&p, n_max).unwrap();
            let eig = EigenPropagator::new(&h).unwrap();
            let rec = eig.reconstruct();
            let err: f64 = rec.iter().zip(h.entries()).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt();
            prop_assert!(err <= 1e-10 * h.frobenius_norm());
            prop_assert!(eig.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn fock_evolution_is_unitary_and_conserves_blocks(
            p in random_params(), state in random_state(36), t in 0.0f64..1e4,
        ) {
            let h = HamiltonianMatrix::fock(&p, 2).unwrap();
            let eig = EigenPropagator::new(&h).unwrap();
            let out = eig.evolve(&state, t).unwrap();
            let norm: f64 = out.iter().map(|z| z.norm_sqr()).sum();
            prop_assert!((norm - 1.0).abs() <= 1e-12);
            let before = block_populations(&h, &state);
            let after = block_populations(&h, &out);
            for (x, y) in before.iter().zip(&after) {
                prop_assert!((x - y).abs() <= 1e-12, "{:?} vs {:?}", before, after);
            }
        }

        #[test]
        fn spectrum_symmetric_under_detuning_sign(
            g in 0.1f64..3.0, hop in -50.0f64..50.0, det in -50.0f64..50.0, wf in 0.0f64..100.0,
        ) {
            let spec = |d: f64, shift: f64| {
                let e = EigenPropagator::new(&HamiltonianMatrix::single_excitation(&params(g, hop, d, wf))).unwrap();
                let mut v: Vec<f64> = e.eigenvalues().iter().map(|l| l - shift).collect();
                v.sort_by(f64::total_cmp);
                v
            };
            // flipping Δ swaps the two sectors' Rabi frequencies, which maps the
            // shifted spectrum onto its negative
            let plus = spec(det, wf + det / 2.0);
            let minus = spec(-det, wf - det / 2.0);
            let mut negated: Vec<f64> = minus.iter().map(|x| -x).collect();
            negated.sort_by(f64::total_cmp);
            for (x, y) in plus.iter().zip(&negated) {
                prop_assert!((x - y).abs() <= 1e-10);
            }
        }
    }
}
