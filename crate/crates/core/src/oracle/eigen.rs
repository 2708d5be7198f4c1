use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::HamiltonianMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Spectral decomposition `H = V diag(λ) V†` of a Hermitian matrix.
///
/// Eigenvalues are sorted ascending; ties keep the order in which the Jacobi
/// sweeps left them, which is deterministic for a given input.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPropagator {
    dim: usize,
    eigenvalues: Vec<f64>,
    /// Row-major; column `k` is the eigenvector of `eigenvalues[k]`.
    eigenvectors: Vec<Complex64>,
}

impl EigenPropagator {
    /// Cyclic complex Jacobi diagonalization.
    pub fn new(h: &HamiltonianMatrix) -> Result<Self> {
        let n = h.dim();
        let mut a = h.entries().to_vec();
        let mut v = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            v[i * n + i] = Complex64::new(1.0, 0.0);
        }
        let scale = h.frobenius_norm();
        let tol = f64::EPSILON * scale * n as f64;

        let mut converged = n <= 1 || scale == 0.0;
        let mut sweeps = 0;
        while !converged {
            if sweeps == MAX_SWEEPS {
                return Err(Error::NoConvergence { sweeps });
            }
            sweeps += 1;
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut a, &mut v, n, p, q);
                }
            }
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i * n + j].norm_sqr())
                .sum();
            converged = off.sqrt() <= tol;
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
        let eigenvalues = order.iter().map(|&k| a[k * n + k].re).collect();
        let mut eigenvectors = vec![Complex64::new(0.0, 0.0); n * n];
        for (col, &k) in order.iter().enumerate() {
            for row in 0..n {
                eigenvectors[row * n + col] = v[row * n + k];
            }
        }
        Ok(Self { dim: n, eigenvalues, eigenvectors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Component `row` of eigenvector `k`.
    pub fn eigenvector_component(&self, row: usize, k: usize) -> Complex64 {
        self.eigenvectors[row * self.dim + k]
    }

    /// `V e^{−iλt} V† ψ`.
    pub fn evolve(&self, init: &[Complex64], t: f64) -> Result<Vec<Complex64>> {
        let n = self.dim;
        if init.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: init.len() });
        }
        if !t.is_finite() || init.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let coeffs: Vec<Complex64> = (0..n)
            .map(|k| {
                let overlap: Complex64 = (0..n).map(|row| self.eigenvectors[row * n + k].conj() * init[row]).sum();
                overlap * Complex64::from_polar(1.0, -self.eigenvalues[k] * t)
            })
            .collect();
        Ok((0..n).map(|row| (0..n).map(|k| self.eigenvectors[row * n + k] * coeffs[k]).sum()).collect())
    }

    /// `V diag(λ) V†` as a dense row-major matrix.
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n)
                    .map(|k| self.eigenvectors[i * n + k] * self.eigenvalues[k] * self.eigenvectors[j * n + k].conj())
                    .sum();
            }
        }
        out
    }
}

/// Annihilates `a[p][q]` with the unitary `U = diag(1, e^{−iφ}) R(θ)` acting on
/// rows/columns `p, q`, where `a[p][q] = r e^{iφ}` and `R` is the real Jacobi
/// rotation for the phase-stripped block.
fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 { 0.5 / theta } else { theta.signum() / (theta.abs() + theta.hypot(1.0)) };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let phase = (apq / r).conj();

    let upp = Complex64::new(c, 0.0);
    let upq = Complex64::new(s, 0.0);
    let uqp = phase * -s;
    let uqq = phase * c;

    // A ← A U
    for k in 0..n {
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        a[k * n + p] = akp * upp + akq * uqp;
        a[k * n + q] = akp * upq + akq * uqq;
    }
    // A ← U† A
    for k in 0..n {
        let (apk, aqk) = (a[p * n + k], a[q * n + k]);
        a[p * n + k] = upp.conj() * apk + uqp.conj() * aqk;
        a[q * n + k] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;
    // V ← V U
    for k in 0..n {
        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
        v[k * n + p] = vkp * upp + vkq * uqp;
        v[k * n + q] = vkp * upq + vkq * uqq;
    }
}
