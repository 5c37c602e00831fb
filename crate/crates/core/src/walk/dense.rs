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

use super::angles::sqrt_entry;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::sysprep::PreparedSystem;

/// Largest `N` for the explicit oracles.
pub const MAX_DENSE_N: usize = 64;

/// Explicit `T`: rows indexed by `r1aug + 2N·r2aug`, columns by the input
/// `r1aug = j + N·a`.
pub fn dense_t(prepared: &PreparedSystem) -> Result<ComplexMatrix> {
    let n = prepared.dim;
    if n > MAX_DENSE_N {
        return Err(Error::TooLarge(n, MAX_DENSE_N));
    }
    let a = &prepared.a_shifted;
    let x = prepared.x;
    let m = 2 * n;
    let mut t = ComplexMatrix::zeros(m * m, m);
    for j in 0..n {
        for k in 0..n {
            let s = sqrt_entry(a, j, k)?;
            let amp0 = s / x.sqrt();
            let amp1 = ((1.0 - n as f64 * a[(j, k)].norm() / x).max(0.0) / n as f64).sqrt();
            t[(j + m * k, j)] = amp0;
            t[(j + m * (k + n), j)] = Complex64::new(amp1, 0.0);
        }
        // |j,1⟩ → |j,1⟩|ζ⟩ with ζ = |0…0,1⟩.
        t[(j + n + m * n, j + n)] = Complex64::new(1.0, 0.0);
    }
    Ok(t)
}

/// Swap of the two `2N`-dimensional registers.
pub fn dense_s(n: usize) -> Result<ComplexMatrix> {
    let dim = 1usize << n;
    if dim > MAX_DENSE_N {
        return Err(Error::TooLarge(dim, MAX_DENSE_N));
    }
    let m = 2 * dim;
    let mut s = ComplexMatrix::zeros(m * m, m * m);
    for a in 0..m {
        for b in 0..m {
            s[(b + m * a, a + m * b)] = Complex64::new(1.0, 0.0);
        }
    }
    Ok(s)
}

/// `W = iS(2TT† − I)`.
pub fn dense_w(prepared: &PreparedSystem) -> Result<ComplexMatrix> {
    let t = dense_t(prepared)?;
    let s = dense_s(prepared.n)?;
    let dim = t.rows();
    let refl = t.matmul(&t.adjoint()).scale(Complex64::new(2.0, 0.0)).sub(&ComplexMatrix::identity(dim));
    Ok(s.matmul(&refl).scale(Complex64::new(0.0, 1.0)))
}
