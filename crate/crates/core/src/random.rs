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

//! Seeded generators for random test systems.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{ComplexMatrix, ComplexVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex_gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) / std::f64::consts::SQRT_2
}

/// `(G + G†)/2` with i.i.d. complex Gaussian `G`.
pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    g.add(&g.adjoint()).scale(Complex64::new(0.5, 0.0))
}

/// Haar-distributed unitary from Gram-Schmidt on a complex Gaussian matrix.
pub fn haar_unitary<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<ComplexVector> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = ComplexVector::from_vec((0..n).map(|_| complex_gaussian(rng)).collect());
        for q in &cols {
            let p = q.dot(&v);
            v = v.sub(&q.scale(p));
        }
        let norm = v.norm();
        if norm > 1e-8 {
            cols.push(v.scale(Complex64::new(1.0 / norm, 0.0)));
        }
    }
    let mut u = ComplexMatrix::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        u.set_column(j, c);
    }
    u
}

/// `U diag(eigenvalues) U†` with Haar `U`.
pub fn hermitian_with_spectrum<R: Rng>(eigenvalues: &[f64], rng: &mut R) -> ComplexMatrix {
    let n = eigenvalues.len();
    let u = haar_unitary(n, rng);
    let d = ComplexMatrix::diag(&eigenvalues.iter().map(|&l| Complex64::new(l, 0.0)).collect::<Vec<_>>());
    let h = u.matmul(&d).matmul(&u.adjoint());
    // Exact Hermitian symmetry.
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(h[(i, i)].re, 0.0)
        } else if i < j {
            h[(i, j)]
        } else {
            h[(j, i)].conj()
        }
    })
}

/// Well-conditioned Hermitian system: eigenvalue magnitudes uniform in
/// `[lo, hi]` with random signs.
pub fn well_conditioned_hermitian<R: Rng>(n: usize, lo: f64, hi: f64, rng: &mut R) -> ComplexMatrix {
    let eigs: Vec<f64> = (0..n)
        .map(|_| {
            let mag = rng.random_range(lo..=hi);
            if rng.random::<bool>() { mag } else { -mag }
        })
        .collect();
    hermitian_with_spectrum(&eigs, rng)
}

pub fn random_vector<R: Rng>(n: usize, rng: &mut R) -> ComplexVector {
    ComplexVector::from_vec((0..n).map(|_| complex_gaussian(rng)).collect())
}
