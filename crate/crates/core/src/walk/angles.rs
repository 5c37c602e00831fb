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

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::sysprep::PreparedSystem;

/// Angles below this are treated as exact zeros and emit no gate.
pub const ANGLE_EPS: f64 = 1e-14;

/// `s_jk` with `s_kj · conj(s_jk) = A_jk` and `|s_jk|² = |A_jk|`. This is the
/// principal root of `conj(A_jk)`, except that a negative real entry above the
/// diagonal takes the other root so the two halves of a symmetric pair differ.
pub fn sqrt_entry(a: &ComplexMatrix, j: usize, k: usize) -> Result<Complex64> {
    let v = a[(j, k)];
    let r = v.norm();
    if r == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let negative_real = v.re < 0.0 && v.im == 0.0;
    if j == k && negative_real {
        return Err(Error::NegativeDiagonal(j));
    }
    let phi = if negative_real && j < k { -std::f64::consts::PI } else { v.arg() };
    Ok(Complex64::from_polar(r.sqrt(), -0.5 * phi))
}

/// Per-entry rotation data for the state-preparation blocks.
#[derive(Debug, Clone)]
pub struct WalkAngles {
    pub dim: usize,
    /// `θ_jk = arccos √(N|A_jk|/X)`, row-major.
    pub theta: Vec<f64>,
    /// `ω_jk = arg s_jk`, row-major.
    pub omega: Vec<f64>,
    pub nonzero: Vec<bool>,
}

impl WalkAngles {
    pub fn new(prepared: &PreparedSystem) -> Result<Self> {
        let a = &prepared.a_shifted;
        let dim = prepared.dim;
        let nf = dim as f64;
        let mut theta = vec![0.0; dim * dim];
        let mut omega = vec![0.0; dim * dim];
        let mut nonzero = vec![false; dim * dim];
        for j in 0..dim {
            for k in 0..dim {
                let s = sqrt_entry(a, j, k)?;
                let idx = j * dim + k;
                if a[(j, k)].norm() == 0.0 {
                    continue;
                }
                nonzero[idx] = true;
                let ratio = (nf * a[(j, k)].norm() / prepared.x).sqrt().min(1.0);
                theta[idx] = ratio.acos();
                omega[idx] = s.arg();
            }
        }
        Ok(Self { dim, theta, omega, nonzero })
    }

    pub fn theta(&self, j: usize, k: usize) -> f64 {
        self.theta[j * self.dim + k]
    }

    pub fn omega(&self, j: usize, k: usize) -> f64 {
        self.omega[j * self.dim + k]
    }

    pub fn is_nonzero(&self, j: usize, k: usize) -> bool {
        self.nonzero[j * self.dim + k]
    }

    pub fn nnz(&self) -> usize {
        self.nonzero.iter().filter(|&&b| b).count()
    }
}
