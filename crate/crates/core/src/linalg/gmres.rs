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

use super::eig::check_square;
use super::matrix::{ComplexMatrix, ComplexVector, ZERO};
use crate::error::{Error, Result};

pub const GMRES_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct GmresOutcome {
    pub x: ComplexVector,
    pub iterations: usize,
    /// Relative residual of the (preconditioned) system at exit.
    pub relative_residual: f64,
    pub converged: bool,
}

/// Unrestarted GMRES with modified Gram-Schmidt, starting from `x = 0`.
/// `max_iter = None` means the system dimension.
pub fn gmres(
    a: &ComplexMatrix,
    b: &ComplexVector,
    tol: f64,
    max_iter: Option<usize>,
) -> Result<GmresOutcome> {
    gmres_preconditioned(a, b, tol, max_iter, |v| Ok(v.clone()))
}

/// GMRES on the left-preconditioned system `M⁻¹A x = M⁻¹b`, where `apply_inv`
/// applies `M⁻¹`. Convergence is judged on the preconditioned residual.
pub fn gmres_preconditioned(
    a: &ComplexMatrix,
    b: &ComplexVector,
    tol: f64,
    max_iter: Option<usize>,
    apply_inv: impl Fn(&ComplexVector) -> Result<ComplexVector>,
) -> Result<GmresOutcome> {
    check_square(a)?;
    let n = a.rows();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: b.dim() });
    }
    assert!(tol > 0.0, "gmres tolerance must be positive");
    let max_iter = max_iter.unwrap_or(n).max(1);

    let r0 = apply_inv(b)?;
    let beta = r0.norm();
    if beta == 0.0 {
        return Ok(GmresOutcome { x: ComplexVector::zeros(n), iterations: 0, relative_residual: 0.0, converged: true });
    }

    let mut basis: Vec<ComplexVector> = vec![r0.scale(Complex64::new(1.0 / beta, 0.0))];
    // Hessenberg columns after Givens rotation, i.e. the R factor.
    let mut r_cols: Vec<Vec<Complex64>> = Vec::new();
    let mut rotations: Vec<(f64, Complex64)> = Vec::new();
    let mut g = vec![Complex64::new(beta, 0.0)];
    let mut iterations = 0;
    let mut residual = beta;

    for k in 0..max_iter {
        iterations = k + 1;
        let mut w = apply_inv(&a.matvec(&basis[k]))?;
        let mut h = vec![ZERO; k + 2];
        for (i, q) in basis.iter().enumerate() {
            let hij = q.dot(&w);
            h[i] = hij;
            for (wv, qv) in w.as_mut_slice().iter_mut().zip(q.iter()) {
                *wv -= hij * qv;
            }
        }
        let hnext = w.norm();
        h[k + 1] = Complex64::new(hnext, 0.0);

        for (i, &(c, s)) in rotations.iter().enumerate() {
            let t = c * h[i] + s * h[i + 1];
            h[i + 1] = -s.conj() * h[i] + c * h[i + 1];
            h[i] = t;
        }
        let (c, s, rho) = givens(h[k], h[k + 1]);
        h[k] = rho;
        h[k + 1] = ZERO;
        rotations.push((c, s));
        let gk = g[k];
        g[k] = c * gk;
        g.push(-s.conj() * gk);
        h.truncate(k + 1);
        r_cols.push(h);
        residual = g[k + 1].norm();

        let lucky = hnext <= 1e-14 * beta;
        if residual <= tol * beta || lucky {
            break;
        }
        basis.push(w.scale(Complex64::new(1.0 / hnext, 0.0)));
    }

    // Back substitution on the triangular R.
    let m = r_cols.len();
    let mut y = vec![ZERO; m];
    for i in (0..m).rev() {
        let mut s = g[i];
        for j in (i + 1)..m {
            s -= r_cols[j][i] * y[j];
        }
        if r_cols[i][i].norm() == 0.0 {
            return Err(Error::Breakdown(i + 1));
        }
        y[i] = s / r_cols[i][i];
    }
    let mut x = ComplexVector::zeros(n);
    for (j, yj) in y.iter().enumerate() {
        for (xv, qv) in x.as_mut_slice().iter_mut().zip(basis[j].iter()) {
            *xv += yj * qv;
        }
    }
    let relative_residual = residual / beta;
    Ok(GmresOutcome { x, iterations, relative_residual, converged: relative_residual <= tol })
}

/// Complex Givens rotation annihilating `b` in `(a, b)`; `c` real.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64, Complex64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, ZERO, a);
    }
    if an == 0.0 {
        return (0.0, (b / bn).conj(), Complex64::new(bn, 0.0));
    }
    let r = an.hypot(bn);
    let c = an / r;
    let phase = a / an;
    let s = phase * b.conj() / r;
    (c, s, phase * r)
}
