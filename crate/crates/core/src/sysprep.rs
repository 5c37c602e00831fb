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

//! Restricts `A0 x0 = b0` to a Hermitian, power-of-two, unit-RHS system with a
//! non-negative diagonal, and maps solutions back.

use std::ops::Range;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector, HERMITIAN_TOL};

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PrepareOptions {
    /// Diagonal shift; `None` picks the smallest shift that clears negative diagonals.
    pub d: Option<f64>,
    /// Dilate even when `A0` is Hermitian.
    pub force_dilation: bool,
}

/// A system in the form the walk solver accepts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PreparedSystem {
    /// Padded (possibly dilated) Hermitian matrix divided by `‖b0‖`, before
    /// the shift. Solving with it preserves `x0`.
    pub a: ComplexMatrix,
    /// `a + d·I`, the matrix the walk operator encodes.
    pub a_shifted: ComplexMatrix,
    /// Unit-norm right-hand side.
    pub b: ComplexVector,
    pub dim: usize,
    pub n: usize,
    /// Scale bound `X = N·max|a_shifted|`.
    pub x: f64,
    pub d: f64,
    pub b0_norm: f64,
    pub solution_block: Range<usize>,
    pub dilated: bool,
    pub original_dim: usize,
}

/// `N·max|A_jk|`.
pub fn compute_x(a_shifted: &ComplexMatrix) -> Result<f64> {
    let m = a_shifted.max_abs();
    if m == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    Ok(a_shifted.rows() as f64 * m)
}

fn embed(block: &ComplexMatrix, dim: usize, pad: Complex64) -> ComplexMatrix {
    let m = block.rows();
    ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i < m && j < m {
            block[(i, j)]
        } else if i == j {
            pad
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

pub fn prepare(a0: &ComplexMatrix, b0: &ComplexVector, options: &PrepareOptions) -> Result<PreparedSystem> {
    if !a0.is_square() {
        return Err(Error::NotSquare { rows: a0.rows(), cols: a0.cols() });
    }
    a0.check_finite()?;
    let m = a0.rows();
    if b0.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, got: b0.dim() });
    }
    let b0_norm = b0.norm();
    if b0_norm == 0.0 || !b0_norm.is_finite() {
        return Err(Error::ZeroRhs);
    }
    let inv = Complex64::new(1.0 / b0_norm, 0.0);
    let hermitian = a0.hermitian_defect() <= HERMITIAN_TOL * a0.max_abs().max(1.0);
    let dilated = options.force_dilation || !hermitian;

    let (core, rhs, solution_block) = if dilated {
        let adj = a0.adjoint();
        let h = ComplexMatrix::from_fn(2 * m, 2 * m, |i, j| match (i < m, j < m) {
            (true, false) => a0[(i, j - m)],
            (false, true) => adj[(i - m, j)],
            _ => Complex64::new(0.0, 0.0),
        });
        let mut rhs = ComplexVector::zeros(2 * m);
        for i in 0..m {
            rhs[i] = b0[i];
        }
        (h, rhs, m..2 * m)
    } else {
        // Exact Hermitian symmetry from the upper triangle.
        let h = ComplexMatrix::from_fn(m, m, |i, j| {
            if i == j {
                Complex64::new(a0[(i, i)].re, 0.0)
            } else if i < j {
                a0[(i, j)]
            } else {
                a0[(j, i)].conj()
            }
        });
        (h, b0.clone(), 0..m)
    };

    let dim = core.rows().next_power_of_two().max(2);
    let n = dim.trailing_zeros() as usize;
    let a = embed(&core, dim, Complex64::new(1.0, 0.0)).scale(inv);
    let mut b = ComplexVector::zeros(dim);
    for i in 0..rhs.dim() {
        b[i] = rhs[i] * inv;
    }

    let min_diag = (0..dim).map(|i| a[(i, i)].re).fold(f64::INFINITY, f64::min);
    let d = match options.d {
        Some(d) => {
            if d < 0.0 || !d.is_finite() || min_diag + d < 0.0 {
                return Err(Error::InvalidShift(d));
            }
            d
        }
        None if dilated => 0.0,
        None => (-min_diag).max(0.0),
    };
    let a_shifted = a.add(&ComplexMatrix::identity(dim).scale(Complex64::new(d, 0.0)));
    let x = compute_x(&a_shifted)?;
    Ok(PreparedSystem { a, a_shifted, b, dim, n, x, d, b0_norm, solution_block, dilated, original_dim: m })
}

impl PreparedSystem {
    /// Normalized walk matrix `Â = a_shifted / X`.
    pub fn a_hat(&self) -> ComplexMatrix {
        self.a_shifted.scale(Complex64::new(1.0 / self.x, 0.0))
    }

    /// Restricts a full-length vector to the solution block.
    pub fn restrict(&self, v: &ComplexVector) -> ComplexVector {
        ComplexVector::from_vec(v.as_slice()[self.solution_block.clone()].to_vec())
    }

    /// Classical reference solution `x0`.
    pub fn reference_solution(&self) -> Result<ComplexVector> {
        Ok(self.restrict(&crate::linalg::lu_solve(&self.a, &self.b)?))
    }
}

/// Divides postselected amplitudes by `C` and keeps the solution block.
pub fn recover_solution(prepared: &PreparedSystem, success_amplitudes: &ComplexVector, c: f64) -> Result<ComplexVector> {
    if success_amplitudes.dim() != prepared.dim {
        return Err(Error::DimensionMismatch { expected: prepared.dim, got: success_amplitudes.dim() });
    }
    Ok(prepared.restrict(&success_amplitudes.scale(Complex64::new(1.0 / c, 0.0))))
}
