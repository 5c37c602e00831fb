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
use proptest::prelude::*;
use walkhhl::linalg::*;
use walkhhl::random;
use walkhhl::Error;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn two_by_two_a() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[-2.0, 1.0], &[1.0, -2.0]])
}

/// Roots of the characteristic cubic of a 3x3 Hermitian matrix, by the
/// trigonometric formula.
fn cubic_eigenvalues(a: &ComplexMatrix) -> [f64; 3] {
    let tr = (0..3).map(|i| a[(i, i)].re).sum::<f64>();
    let minor = |i: usize, j: usize| (a[(i, i)] * a[(j, j)] - a[(i, j)] * a[(j, i)]).re;
    let c1 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = (a[(0, 0)] * (a[(1, 1)] * a[(2, 2)] - a[(1, 2)] * a[(2, 1)])
        - a[(0, 1)] * (a[(1, 0)] * a[(2, 2)] - a[(1, 2)] * a[(2, 0)])
        + a[(0, 2)] * (a[(1, 0)] * a[(2, 1)] - a[(1, 1)] * a[(2, 0)]))
        .re;
    // λ³ - tr λ² + c1 λ - det = 0, depressed with λ = t + tr/3.
    let p = c1 - tr * tr / 3.0;
    let q = -2.0 * tr.powi(3) / 27.0 + tr * c1 / 3.0 - det;
    let m = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    let mut roots = [0.0; 3];
    for (k, r) in roots.iter_mut().enumerate() {
        *r = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + tr / 3.0;
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn taylor_expm(a: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let n = a.rows();
    let ia = a.scale(c(0.0, t));
    let mut term = ComplexMatrix::identity(n);
    let mut sum = term.clone();
    for k in 1..80 {
        term = term.matmul(&ia).scale(c(1.0 / k as f64, 0.0));
        sum = sum.add(&term);
    }
    sum
}

fn residual_ok(a: &ComplexMatrix, e: &EigenDecomposition, tol: f64) -> bool {
    let scale = a.frobenius_norm().max(1e-300);
    (0..a.rows()).all(|j| {
        let v = e.eigenvectors.column(j);
        let r = a.matvec(&v).sub(&v.scale(c(e.eigenvalues[j], 0.0)));
        r.norm() <= tol * scale
    })
}

#[test]
fn eig_two_by_two_matrix() {
    let e = hermitian_eig(&two_by_two_a()).unwrap();
    assert!((e.eigenvalues[0] + 3.0).abs() < 1e-12);
    assert!((e.eigenvalues[1] + 1.0).abs() < 1e-12);
}

#[test]
fn eig_identity_keeps_basis() {
    let e = hermitian_eig(&ComplexMatrix::identity(4)).unwrap();
    assert_eq!(e.eigenvalues, vec![1.0; 4]);
    assert_eq!(e.eigenvectors, ComplexMatrix::identity(4));
}

#[test]
fn eig_random_8x8_seed_42() {
    let mut rng = random::rng(42);
    let a = random::random_hermitian(8, &mut rng);
    let e = hermitian_eig(&a).unwrap();
    assert!(residual_ok(&a, &e, 1e-10));
    let v = &e.eigenvectors;
    assert!(v.adjoint().matmul(v).max_abs_diff(&ComplexMatrix::identity(8)) < 1e-10);
}

#[test]
fn eig_matches_cubic_roots() {
    let mut rng = random::rng(7);
    for _ in 0..20 {
        let a = random::random_hermitian(3, &mut rng);
        let e = hermitian_eig(&a).unwrap();
        let roots = cubic_eigenvalues(&a);
        for (l, r) in e.eigenvalues.iter().zip(roots) {
            assert!((l - r).abs() < 1e-9, "{l} vs {r}");
        }
    }
}

#[test]
fn eig_rejects_bad_input() {
    let ns = ComplexMatrix::zeros(2, 3);
    assert!(matches!(hermitian_eig(&ns), Err(Error::NotSquare { .. })));
    let nh = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
    assert!(matches!(hermitian_eig(&nh), Err(Error::NotHermitian(_))));
}

#[test]
fn lu_two_by_two_system() {
    let x = lu_solve(&two_by_two_a(), &ComplexVector::from_real(&[0.0, 1.0])).unwrap();
    assert!((x[0] - c(-1.0 / 3.0, 0.0)).norm() < 1e-14);
    assert!((x[1] - c(-2.0 / 3.0, 0.0)).norm() < 1e-14);
}

#[test]
fn lu_identity_and_singular() {
    let b = ComplexVector::from_vec(vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.0, 0.0)]);
    assert_eq!(lu_solve(&ComplexMatrix::identity(3), &b).unwrap(), b);
    let s = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[2.0, 4.0]]);
    assert!(matches!(lu_solve(&s, &ComplexVector::from_real(&[1.0, 1.0])), Err(Error::Singular(_))));
}

#[test]
fn gmres_trivial_cases() {
    let mut rng = random::rng(3);
    let b = random::random_vector(5, &mut rng);
    let out = gmres(&ComplexMatrix::identity(5), &b, 1e-8, None).unwrap();
    assert_eq!(out.iterations, 1);
    assert!(out.x.sub(&b).norm() < 1e-12);

    let d: Vec<Complex64> = (1..=8).map(|j| c(j as f64, 0.0)).collect();
    let out = gmres(&ComplexMatrix::diag(&d), &ComplexVector::from_real(&[1.0; 8]), 1e-12, None).unwrap();
    assert!(out.converged);
    for j in 0..8 {
        assert!((out.x[j] - c(1.0 / (j + 1) as f64, 0.0)).norm() < 1e-8);
    }
}

#[test]
fn gmres_reports_non_convergence() {
    let d: Vec<Complex64> = (1..=8).map(|j| c(j as f64, 0.0)).collect();
    let out = gmres(&ComplexMatrix::diag(&d), &ComplexVector::from_real(&[1.0; 8]), 1e-12, Some(3)).unwrap();
    assert_eq!(out.iterations, 3);
    assert!(!out.converged);
}

#[test]
fn expm_examples() {
    let z = hermitian_expm(&ComplexMatrix::zeros(3, 3), 1.0).unwrap();
    assert!(z.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-15);
    let p = hermitian_expm(&ComplexMatrix::diag(&[c(std::f64::consts::PI, 0.0)]), 1.0).unwrap();
    assert!((p[(0, 0)] - c(-1.0, 0.0)).norm() < 1e-15);

    let u = hermitian_expm(&two_by_two_a(), 1.0).unwrap();
    assert!(u.max_abs_diff(&taylor_expm(&two_by_two_a(), 1.0)) < 1e-10);
    // Eigenvalues of U: (-3 ± ...) → e^{-3i}, e^{-i} on the eigenvectors (1,-1)/√2 and (1,1)/√2.
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let vm = ComplexVector::from_real(&[s, -s]);
    let vp = ComplexVector::from_real(&[s, s]);
    assert!(u.matvec(&vm).sub(&vm.scale(Complex64::from_polar(1.0, -3.0))).norm() < 1e-12);
    assert!(u.matvec(&vp).sub(&vp.scale(Complex64::from_polar(1.0, -1.0))).norm() < 1e-12);
}

fn hermitian_strategy(max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = random::rng(seed);
        random::random_hermitian(n, &mut rng)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn eig_reconstructs(a in hermitian_strategy(8)) {
        let e = hermitian_eig(&a).unwrap();
        let back = e.reconstruct_with(|l| c(l, 0.0));
        prop_assert!(back.max_abs_diff(&a) < 1e-10);
        prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(residual_ok(&a, &e, 1e-10));
    }

    #[test]
    fn lu_residual_small(seed in any::<u64>(), n in 1usize..12) {
        let mut rng = random::rng(seed);
        let a = ComplexMatrix::from_fn(n, n, |_, _| random::complex_gaussian(&mut rng));
        let b = random::random_vector(n, &mut rng);
        if let Ok(x) = lu_solve(&a, &b) {
            prop_assert!(a.matvec(&x).sub(&b).norm() <= 1e-10 * b.norm() * (1.0 + a.frobenius_norm() * x.norm() / b.norm()));
        }
    }

    #[test]
    fn lu_residual_well_conditioned(seed in any::<u64>(), n in 1usize..10) {
        let mut rng = random::rng(seed);
        let a = random::well_conditioned_hermitian(n, 1.0, 10.0, &mut rng);
        let b = random::random_vector(n, &mut rng);
        let x = lu_solve(&a, &b).unwrap();
        prop_assert!(a.matvec(&x).sub(&b).norm() <= 1e-10 * b.norm());
    }

    #[test]
    fn gmres_agrees_with_lu(seed in any::<u64>(), n in 1usize..16) {
        let mut rng = random::rng(seed);
        let a = random::well_conditioned_hermitian(n, 1.0, 100.0, &mut rng);
        let b = random::random_vector(n, &mut rng);
        let x_lu = lu_solve(&a, &b).unwrap();
        let out = gmres(&a, &b, 1e-12, None).unwrap();
        prop_assert!(out.x.sub(&x_lu).norm() <= 1e-6 * x_lu.norm());
    }

    #[test]
    fn expm_inverse_pair(a in hermitian_strategy(6), t in -3.0f64..3.0) {
        let u = hermitian_expm(&a, t).unwrap();
        let v = hermitian_expm(&a, -t).unwrap();
        prop_assert!(u.matmul(&v).max_abs_diff(&ComplexMatrix::identity(a.rows())) < 1e-10);
        prop_assert!(unitary_defect(&u) < 1e-10);
    }
}
