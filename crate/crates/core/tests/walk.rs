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

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use num_complex::Complex64;
use proptest::prelude::*;
use walkhhl::linalg::{hermitian_eig, unitary_defect, ComplexMatrix, ComplexVector};
use walkhhl::random;
use walkhhl::sim::{apply, dense_unitary, Circuit, GateKind, GateOp, RegisterLayout, StateVector};
use walkhhl::sysprep::{prepare, PrepareOptions, PreparedSystem};
use walkhhl::walk::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn two_by_two() -> PreparedSystem {
    let a0 = ComplexMatrix::from_real_rows(&[&[-2.0, 1.0], &[1.0, -2.0]]);
    prepare(&a0, &ComplexVector::from_real(&[0.0, 1.0]), &PrepareOptions { d: Some(3.0), ..Default::default() }).unwrap()
}

fn random_prepared(seed: u64, dim: usize) -> PreparedSystem {
    let mut rng = random::rng(seed);
    let a = random::random_hermitian(dim, &mut rng);
    let b = random::random_vector(dim, &mut rng);
    prepare(&a, &b, &PrepareOptions::default()).unwrap()
}

/// Walk circuit restricted to the 2n+2 register qubits.
fn w_circuit(p: &PreparedSystem) -> Circuit {
    let layout = RegisterLayout::new(p.n, 1).unwrap();
    let ops = WalkOperator::new(p, &layout).unwrap().ops(None);
    Circuit::new(2 * p.n + 2, ops).unwrap()
}

/// `(1/√N)Σ_k |k⟩[√(N A*_jk/X)|0⟩ + √(1−N|A_jk|/X)|1⟩]` on a local n+1 register,
/// evaluated straight from the formula with the root chosen by `sqrt_entry`.
fn prepped_state(p: &PreparedSystem, j: usize) -> ComplexVector {
    let n = p.dim;
    let mut v = ComplexVector::zeros(2 * n);
    for k in 0..n {
        let s = sqrt_entry(&p.a_shifted, j, k).unwrap();
        v[k] = s / p.x.sqrt();
        v[k + n] = c(((1.0 - n as f64 * p.a_shifted[(j, k)].norm() / p.x) / n as f64).sqrt(), 0.0);
    }
    v
}

#[test]
fn sqrt_entry_examples() {
    let a = ComplexMatrix::from_vec(2, 2, vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(1.0, 0.0)]).unwrap();
    assert_eq!(sqrt_entry(&a, 0, 0).unwrap(), c(1.0, 0.0));
    assert!((sqrt_entry(&a, 0, 1).unwrap() - Complex64::from_polar(1.0, -FRAC_PI_4)).norm() < 1e-15);
    let b = ComplexMatrix::from_real_rows(&[&[2.0, -4.0], &[-4.0, 2.0]]);
    let prod = sqrt_entry(&b, 0, 1).unwrap() * sqrt_entry(&b, 1, 0).unwrap().conj();
    assert!((prod - c(-4.0, 0.0)).norm() < 1e-14);
    let neg = ComplexMatrix::from_real_rows(&[&[-1.0]]);
    assert!(sqrt_entry(&neg, 0, 0).is_err());
}

#[test]
fn bj_for_two_by_two_system_is_hadamard() {
    let p = two_by_two();
    for j in 0..2 {
        let u = dense_unitary(&build_bj(&p, j).unwrap()).unwrap();
        let h = ComplexMatrix::identity(2).kron(&ComplexMatrix::from_real_rows(&[&[FRAC_1_SQRT_2, FRAC_1_SQRT_2], &[FRAC_1_SQRT_2, -FRAC_1_SQRT_2]]));
        assert!(u.max_abs_diff(&h) < 1e-14);
    }
}

#[test]
fn bj_for_scaled_identity() {
    let p = prepare(&ComplexMatrix::identity(2).scale(c(2.0, 0.0)), &ComplexVector::from_real(&[1.0, 0.0]), &PrepareOptions::default()).unwrap();
    assert_eq!(p.x, 4.0);
    for j in 0..2 {
        let s = apply(&StateVector::zero_state(2), &build_bj(&p, j).unwrap()).unwrap();
        let want = prepped_state(&p, j);
        // (1/√2)[|j⟩|0⟩ + |1−j⟩|1⟩] since N|A_jj|/X = 1.
        assert!((want[j] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!(ComplexVector::from_vec(s.amplitudes()).sub(&want).norm() < 1e-14);
    }
}

#[test]
fn bj_matches_formula_on_random_systems() {
    for seed in 0..5 {
        let p = random_prepared(seed, 4);
        for j in 0..4 {
            let s = apply(&StateVector::zero_state(3), &build_bj(&p, j).unwrap()).unwrap();
            assert!(ComplexVector::from_vec(s.amplitudes()).sub(&prepped_state(&p, j)).norm() < 1e-10);
        }
    }
}

#[test]
fn bprime_examples() {
    let b = build_bprime(2);
    let s = apply(&StateVector::zero_state(3), &b).unwrap();
    assert!((s.amplitude(0b100) - c(1.0, 0.0)).norm() < 1e-15);
    assert_eq!(s.amplitude(0), c(0.0, 0.0));
    let twice = b.then(&b).unwrap();
    assert_eq!(dense_unitary(&twice).unwrap(), ComplexMatrix::identity(8));
}

fn t0_compact(p: &PreparedSystem) -> Circuit {
    let layout = RegisterLayout::new(p.n, 1).unwrap();
    let t0 = build_t0(p, &layout).unwrap();
    Circuit::new(2 * p.n + 2, t0.into_ops()).unwrap()
}

#[test]
fn t0_matches_dense_t_on_ancilla_zero_inputs() {
    for seed in 0..5 {
        let p = random_prepared(100 + seed, 4);
        let t = dense_t(&p).unwrap();
        let circ = t0_compact(&p);
        for j in 0..4 {
            let out = apply(&StateVector::basis_state(2 * p.n + 2, j), &circ).unwrap();
            assert!(ComplexVector::from_vec(out.amplitudes()).sub(&t.column(j)).norm() < 1e-10);
        }
    }
}

#[test]
fn t0_ignores_ancilla_one_inputs() {
    let p = random_prepared(3, 4);
    let circ = t0_compact(&p);
    let idx = 2 + 4; // |j=2, a=1⟩
    let out = apply(&StateVector::basis_state(6, idx), &circ).unwrap();
    assert!((out.amplitude(idx) - c(1.0, 0.0)).norm() < 1e-14);
}

#[test]
fn reflector_examples() {
    let empty = Circuit::empty(1);
    let r = dense_unitary(&build_reflector(&empty)).unwrap();
    assert!(r.max_abs_diff(&ComplexMatrix::diag(&[c(1.0, 0.0), c(-1.0, 0.0)])) < 1e-15);
    // Reflect a|x⟩ + b|y⟩ about |y⟩ = X|0⟩.
    let prep = Circuit::new(1, vec![GateOp::single(GateKind::X, 0)]).unwrap();
    let r = dense_unitary(&build_reflector(&prep)).unwrap();
    let (a, b) = (0.6, 0.8);
    let out = r.matvec(&ComplexVector::from_real(&[a, b]));
    assert!(out.sub(&ComplexVector::from_real(&[-a, b])).norm() < 1e-15);
}

#[test]
fn w_for_two_by_two_system() {
    let p = two_by_two();
    let w = dense_unitary(&w_circuit(&p)).unwrap();
    assert!(w.max_abs_diff(&dense_w(&p).unwrap()) < 1e-12);
    let t = dense_t(&p).unwrap();
    let s = dense_s(1).unwrap();
    let e = hermitian_eig(&p.a_hat()).unwrap();
    // λ̂ = 0 → μ = ±1 (phases 0, 1/2); λ̂ = 1 → μ = i (phase 1/4).
    assert!(e.eigenvalues[0].abs() < 1e-12 && (e.eigenvalues[1] - 1.0).abs() < 1e-12);
    let mut u0 = ComplexVector::zeros(4);
    let mut u1 = ComplexVector::zeros(4);
    for i in 0..2 {
        u0[i] = e.eigenvectors[(i, 0)];
        u1[i] = e.eigenvectors[(i, 1)];
    }
    let tu0 = t.matvec(&u0);
    for mu in [c(1.0, 0.0), c(-1.0, 0.0)] {
        let v = tu0.add(&s.matvec(&tu0).scale(c(0.0, 1.0) * mu)).scale(c(1.0 / 2f64.sqrt(), 0.0));
        assert!((v.norm() - 1.0).abs() < 1e-12);
        assert!(w.matvec(&v).sub(&v.scale(mu)).norm() < 1e-12);
    }
    // Degenerate λ̂ = 1: T|u⟩ itself has eigenvalue i.
    let tu1 = t.matvec(&u1);
    assert!(w.matvec(&tu1).sub(&tu1.scale(c(0.0, 1.0))).norm() < 1e-12);
    // W·T|u⟩ = iS·T|u⟩.
    for tu in [&tu0, &tu1] {
        assert!(w.matvec(tu).sub(&s.matvec(tu).scale(c(0.0, 1.0))).norm() < 1e-12);
    }
}

#[test]
fn w_unitary_and_matches_oracle() {
    for (seed, dim) in [(1u64, 2usize), (2, 4), (3, 4)] {
        let p = random_prepared(seed, dim);
        let w = dense_unitary(&w_circuit(&p)).unwrap();
        assert!(unitary_defect(&w) < 1e-10);
        assert!(w.max_abs_diff(&dense_w(&p).unwrap()) < 1e-9);
    }
}

#[test]
fn full_layout_w_leaves_other_registers_alone() {
    let p = random_prepared(4, 2);
    let layout = RegisterLayout::new(1, 2).unwrap();
    let w = build_w(&p, &layout).unwrap();
    assert_eq!(w.num_qubits(), 4 + 2 + 1);
    let compact = dense_unitary(&w_circuit(&p)).unwrap();
    let full = dense_unitary(&w).unwrap();
    let expect = ComplexMatrix::identity(8).kron(&compact);
    assert!(full.max_abs_diff(&expect) < 1e-10);
}

/// `(1 + iμS)T|u⟩ / √(2(1−λ̂²))`.
fn walk_eigvec(t: &ComplexMatrix, s: &ComplexMatrix, u: &ComplexVector, mu: Complex64, lhat: f64) -> ComplexVector {
    let tu = t.matvec(u);
    tu.add(&s.matvec(&tu).scale(c(0.0, 1.0) * mu)).scale(c(1.0 / (2.0 * (1.0 - lhat * lhat)).sqrt(), 0.0))
}

fn spectral_checks(p: &PreparedSystem, tol: f64) {
    let t = dense_t(p).unwrap();
    let s = dense_s(p.n).unwrap();
    let w = dense_w(p).unwrap();
    let n = p.dim;
    // T†T = I, T†ST = Â on the ancilla-0 block.
    assert!(t.adjoint().matmul(&t).max_abs_diff(&ComplexMatrix::identity(2 * n)) < 1e-10);
    let tst = t.adjoint().matmul(&s).matmul(&t);
    let ahat = p.a_hat();
    for i in 0..n {
        for j in 0..n {
            assert!((tst[(i, j)] - ahat[(i, j)]).norm() < 1e-10);
        }
    }
    let e = hermitian_eig(&ahat).unwrap();
    let mut combo = ComplexVector::zeros(4 * n * n);
    let mut b_aug = ComplexVector::zeros(2 * n);
    for i in 0..n {
        b_aug[i] = p.b[i];
    }
    for jv in 0..n {
        let lhat = e.eigenvalues[jv];
        let mut u = ComplexVector::zeros(2 * n);
        for i in 0..n {
            u[i] = e.eigenvectors[(i, jv)];
        }
        let root = (1.0 - lhat * lhat).sqrt();
        let mu_p = c(root, lhat);
        let mu_m = c(-root, lhat);
        let beta = u.dot(&b_aug);
        if (1.0 - lhat.abs()) < 1e-6 {
            continue;
        }
        for mu in [mu_p, mu_m] {
            let v = walk_eigvec(&t, &s, &u, mu, lhat);
            assert!((v.norm() - 1.0).abs() < tol);
            assert!(w.matvec(&v).sub(&v.scale(mu)).norm() < tol);
        }
        let vp = walk_eigvec(&t, &s, &u, mu_p, lhat);
        let vm = walk_eigvec(&t, &s, &u, mu_m, lhat);
        // T|u⟩ = (μ+ v− − μ− v+)/√2.
        let tu = vm.scale(mu_p).sub(&vp.scale(mu_m)).scale(c(FRAC_1_SQRT_2, 0.0));
        combo = combo.add(&tu.scale(beta));
    }
    assert!(t.matvec(&b_aug).sub(&combo).norm() < tol);
}

#[test]
fn spectral_identities_on_random_systems() {
    for seed in 0..10 {
        spectral_checks(&random_prepared(500 + seed, if seed % 2 == 0 { 2 } else { 4 }), 1e-9);
    }
}

fn hermitian_with_negatives(seed: u64, n: usize) -> ComplexMatrix {
    let mut rng = random::rng(seed);
    let mut a = random::random_hermitian(n, &mut rng);
    // Force some negative real off-diagonal pairs.
    for j in 0..n {
        for k in (j + 1)..n {
            if (j + k + seed as usize) % 2 == 0 {
                let v = -a[(j, k)].norm();
                a[(j, k)] = c(v, 0.0);
                a[(k, j)] = c(v, 0.0);
            }
        }
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn product_identity(seed in any::<u64>(), n in 1usize..7) {
        let mut a = hermitian_with_negatives(seed, n);
        for i in 0..n {
            a[(i, i)] = c(a[(i, i)].re.abs(), 0.0);
        }
        for j in 0..n {
            for k in 0..n {
                let s_jk = sqrt_entry(&a, j, k).unwrap();
                let s_kj = sqrt_entry(&a, k, j).unwrap();
                prop_assert!((s_kj * s_jk.conj() - a[(j, k)]).norm() < 1e-12);
                prop_assert!((s_jk.norm_sqr() - a[(j, k)].norm()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn reflector_is_involution(seed in any::<u64>(), q in 1usize..5) {
        let mut rng = random::rng(seed);
        let ops: Vec<GateOp> = (0..8).map(|i| {
            let t = i % q;
            let g = GateOp::single(GateKind::Ry(rand::Rng::random_range(&mut rng, -3.0..3.0)), t);
            if q > 1 && i % 3 == 0 { g.controlled(&[((t + 1) % q, true)]) } else { g }
        }).collect();
        let prep = Circuit::new(q, ops).unwrap();
        let r = dense_unitary(&build_reflector(&prep)).unwrap();
        prop_assert!(r.matmul(&r).max_abs_diff(&ComplexMatrix::identity(1 << q)) < 1e-10);
    }
}
