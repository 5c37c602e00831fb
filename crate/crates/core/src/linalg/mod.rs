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

//! Dense complex linear algebra. Everything here doubles as the classical
//! reference that quantum results are checked against.

mod eig;
mod gmres;
mod lu;
mod matrix;

pub use eig::{
    check_hermitian, hermitian_eig, hermitian_eig_with, hermitian_expm, unitary_defect, EigOptions,
    EigenDecomposition, HERMITIAN_TOL, JACOBI_MAX_SWEEPS, JACOBI_TOL,
};
pub use gmres::{gmres, gmres_preconditioned, GmresOutcome, GMRES_TOL};
pub use lu::{lu_inverse, lu_solve, LuFactorization, PIVOT_TOL};
pub use matrix::{ComplexMatrix, ComplexVector};

pub use num_complex::Complex64;

/// `|⟨a|b⟩|² / (‖a‖²‖b‖²)`, insensitive to global phase.
pub fn fidelity(a: &ComplexVector, b: &ComplexVector) -> f64 {
    let na = a.norm();
    let nb = b.norm();
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    a.dot(b).norm_sqr() / (na * na * nb * nb)
}

/// Rotates `v` by the global phase that best aligns it with `reference`.
pub fn align_phase(v: &ComplexVector, reference: &ComplexVector) -> ComplexVector {
    let ov = v.dot(reference);
    if ov.norm() == 0.0 {
        return v.clone();
    }
    v.scale(ov / ov.norm())
}
