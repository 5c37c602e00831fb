// Copyright 2026 The walkhhl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{Error, Result};

/// Hermiticity tolerance, relative to `max(1, max|A|)`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Off-diagonal Frobenius threshold, relative to `‖A‖_F`.
pub const JACOBI_TOL: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, Copy)]
pub struct EigOptions {
    pub hermitian_tol: f64,
    pub offdiag_tol: f64,
    pub max_sweeps: usize,
}

impl Default for EigOptions {
    fn default() -> Self {
        Self { hermitian_tol: HERMITIAN_TOL, offdiag_tol: JACOBI_TOL, max_sweeps: JACOBI_MAX_SWEEPS }
    }
}

/// Eigenvalues in ascending order with matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Rebuilds `V f(Λ) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = v.rows();
        let fl: Vec<Complex64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| v[(i, k)] * fl[k] * v[(j, k)].conj()).sum()
        })
    }
}

pub(crate) fn check_square(a: &ComplexMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    Ok(())
}

pub fn check_hermitian(a: &ComplexMatrix, tol: f64) -> Result<()> {
    check_square(a)?;
    a.check_finite()?;
    let defect = a.hermitian_defect();
    if defect > tol * a.max_abs().max(1.0) {
        return Err(Error::NotHermitian(defect));
    }
    Ok(())
}

pub fn hermitian_eig(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    hermitian_eig_with(a, &EigOptions::default())
}

/// Cyclic complex Jacobi. Each pivot is first made real by a diagonal phase,
/// then annihilated by a real plane rotation.
pub fn hermitian_eig_with(a: &ComplexMatrix, opts: &EigOptions) -> Result<EigenDecomposition> {
    check_hermitian(a, opts.hermitian_tol)?;
    let n = a.rows();
    // Symmetrize so roundoff asymmetry does not leak into the result.
    let mut m = ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(a[(i, i)].re, 0.0)
        } else {
            0.5 * (a[(i, j)] + a[(j, i)].conj())
        }
    });
    let mut v = ComplexMatrix::identity(n);
    let scale = m.frobenius_norm();
    let threshold = opts.offdiag_tol * scale;

    for _sweep in 0..opts.max_sweeps {
        if off_diagonal_norm(&m) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition { eigenvalues, eigenvectors })
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iφ}
    let tau = (m[(q, q)].re - m[(p, p)].re) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
    let gpp = Complex64::new(c, 0.0);
    let gpq = Complex64::new(s, 0.0);
    let gqp = -s * phase.conj();
    let gqq = c * phase.conj();
    let n = m.rows();
    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * gpp + akq * gqp;
        m[(k, q)] = akp * gpq + akq * gqq;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = gpp.conj() * apk + gqp.conj() * aqk;
        m[(q, k)] = gpq.conj() * apk + gqq.conj() * aqk;
    }
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * gpp + vkq * gqp;
        v[(k, q)] = vkp * gpq + vkq * gqq;
    }
}

/// `e^{iAt}` for Hermitian `A`.
pub fn hermitian_expm(a: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(a)?;
    Ok(eig.reconstruct_with(|l| Complex64::from_polar(1.0, l * t)))
}

/// `max |U†U - I|`.
pub fn unitary_defect(u: &ComplexMatrix) -> f64 {
    u.adjoint().matmul(u).max_abs_diff(&ComplexMatrix::identity(u.rows()))
}
