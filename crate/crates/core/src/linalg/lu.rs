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
use super::matrix::{ComplexMatrix, ComplexVector};
use crate::error::{Error, Result};

/// Pivots below this fraction of `max|A|` are treated as singular.
pub const PIVOT_TOL: f64 = 1e-14;

/// `PA = LU` with partial pivoting; `L` has a unit diagonal and shares storage with `U`.
#[derive(Debug, Clone)]
pub struct LuFactorization {
    lu: ComplexMatrix,
    perm: Vec<usize>,
}

impl LuFactorization {
    pub fn new(a: &ComplexMatrix) -> Result<Self> {
        Self::with_tol(a, PIVOT_TOL)
    }

    pub fn with_tol(a: &ComplexMatrix, pivot_tol: f64) -> Result<Self> {
        check_square(a)?;
        a.check_finite()?;
        let n = a.rows();
        let floor = pivot_tol * a.max_abs();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (p, mag) = (k..n)
                .map(|i| (i, lu[(i, k)].norm()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if mag <= floor || mag == 0.0 {
                return Err(Error::Singular(mag));
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
                perm.swap(k, p);
            }
            let pivot = lu[(k, k)];
            for i in (k + 1)..n {
                let f = lu[(i, k)] / pivot;
                lu[(i, k)] = f;
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in (k + 1)..n {
                    let u = lu[(k, j)];
                    lu[(i, j)] -= f * u;
                }
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn solve(&self, b: &ComplexVector) -> Result<ComplexVector> {
        let n = self.dim();
        if b.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: b.dim() });
        }
        let mut y: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let s: Complex64 = (0..i).map(|j| self.lu[(i, j)] * y[j]).sum();
            y[i] -= s;
        }
        for i in (0..n).rev() {
            let s: Complex64 = ((i + 1)..n).map(|j| self.lu[(i, j)] * y[j]).sum();
            y[i] = (y[i] - s) / self.lu[(i, i)];
        }
        Ok(ComplexVector::from_vec(y))
    }

    pub fn inverse(&self) -> Result<ComplexMatrix> {
        let n = self.dim();
        let mut inv = ComplexMatrix::zeros(n, n);
        for j in 0..n {
            inv.set_column(j, &self.solve(&ComplexVector::basis(n, j))?);
        }
        Ok(inv)
    }
}

pub fn lu_solve(a: &ComplexMatrix, b: &ComplexVector) -> Result<ComplexVector> {
    LuFactorization::new(a)?.solve(b)
}

pub fn lu_inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    LuFactorization::new(a)?.inverse()
}
