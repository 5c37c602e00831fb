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
use rayon::prelude::*;

use super::circuit::{validate_op, Circuit};
use super::gate::{GateKind, GateOp, Mat2};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector};

/// Below this many inner iterations a kernel runs serially.
const PAR_THRESHOLD: usize = 1 << 14;
const NORM_TOL: f64 = 1e-10;

/// Statevector with an explicitly tracked global phase. The physical state is
/// `global_phase · amplitudes`.
#[derive(Debug, Clone)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
    global_phase: Complex64,
}

/// Positions of the fixed bits plus the value they must take, used to walk
/// every index that satisfies a set of controls.
struct IndexPlan {
    sorted_fixed: Vec<usize>,
    base: usize,
    count: usize,
}

impl IndexPlan {
    fn new(num_qubits: usize, fixed: &[usize], base: usize) -> Self {
        let mut sorted_fixed = fixed.to_vec();
        sorted_fixed.sort_unstable();
        Self { count: 1usize << (num_qubits - sorted_fixed.len()), sorted_fixed, base }
    }

    #[inline]
    fn index(&self, mut x: usize) -> usize {
        for &p in &self.sorted_fixed {
            let low = x & ((1usize << p) - 1);
            x = ((x >> p) << (p + 1)) | low;
        }
        x | self.base
    }
}

#[derive(Clone, Copy)]
struct SyncPtr(*mut Complex64);
unsafe impl Send for SyncPtr {}
unsafe impl Sync for SyncPtr {}

impl SyncPtr {
    /// # Safety
    /// Callers guarantee that concurrent users touch disjoint indices.
    #[inline]
    unsafe fn at(self, i: usize) -> *mut Complex64 {
        self.0.add(i)
    }
}

/// Runs `f(x)` for every `x < count`, in parallel when large. Each `x` must
/// touch a disjoint set of amplitudes.
fn for_each_index(count: usize, f: impl Fn(usize) + Sync + Send) {
    if count >= PAR_THRESHOLD {
        let chunk = (count / (rayon::current_num_threads() * 4)).max(1024);
        (0..count).into_par_iter().with_min_len(chunk).for_each(f);
    } else {
        (0..count).for_each(f);
    }
}

impl StateVector {
    pub fn zero_state(num_qubits: usize) -> Self {
        Self::basis_state(num_qubits, 0)
    }

    pub fn basis_state(num_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self { num_qubits, amplitudes, global_phase: Complex64::new(1.0, 0.0) }
    }

    /// Wraps amplitudes that must already be normalized.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if !len.is_power_of_two() {
            return Err(Error::DimensionMismatch { expected: len.next_power_of_two(), got: len });
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { num_qubits: len.trailing_zeros() as usize, amplitudes, global_phase: Complex64::new(1.0, 0.0) })
    }

    /// Places a normalized copy of `v` on the lowest `log2(dim v)` qubits.
    pub fn embed(num_qubits: usize, v: &ComplexVector) -> Result<Self> {
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::ZeroRhs);
        }
        if v.dim() > (1 << num_qubits) {
            return Err(Error::DimensionMismatch { expected: 1 << num_qubits, got: v.dim() });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        for (i, a) in v.iter().enumerate() {
            amplitudes[i] = a / norm;
        }
        Ok(Self { num_qubits, amplitudes, global_phase: Complex64::new(1.0, 0.0) })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Amplitudes without the tracked global phase.
    pub fn raw_amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn global_phase(&self) -> Complex64 {
        self.global_phase
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.global_phase * self.amplitudes[index]
    }

    /// Physical amplitudes, global phase folded in.
    pub fn amplitudes(&self) -> Vec<Complex64> {
        self.amplitudes.iter().map(|a| a * self.global_phase).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Total probability of indices with `(i & mask) == value`.
    pub fn probability_where(&self, mask: usize, value: usize) -> f64 {
        self.amplitudes.iter().enumerate().filter(|(i, _)| i & mask == value).map(|(_, a)| a.norm_sqr()).sum()
    }

    /// `max_i |a_i − e^{iγ} b_i|` with `γ` chosen from the largest entry of `other`.
    pub fn max_deviation_up_to_phase(&self, other: &StateVector) -> f64 {
        let a = self.amplitudes();
        let b = other.amplitudes();
        let (k, _) = b.iter().enumerate().fold((0, -1.0), |acc, (i, z)| if z.norm() > acc.1 { (i, z.norm()) } else { acc });
        let ratio = if b[k].norm() > 0.0 && a[k].norm() > 0.0 { a[k] / b[k] } else { Complex64::new(1.0, 0.0) };
        let phase = ratio / ratio.norm();
        a.iter().zip(&b).map(|(x, y)| (x - phase * y).norm()).fold(0.0, f64::max)
    }

    pub fn apply(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(Error::WidthMismatch { state: self.num_qubits, circuit: circuit.num_qubits() });
        }
        for op in circuit.ops() {
            self.apply_op_unchecked(op);
        }
        Ok(())
    }

    /// Applies a sequence of ops that may not be wrapped in a `Circuit`.
    pub fn apply_ops<'a>(&mut self, ops: impl IntoIterator<Item = &'a GateOp>) -> Result<()> {
        for op in ops {
            self.apply_op(op)?;
        }
        Ok(())
    }

    pub fn apply_op(&mut self, op: &GateOp) -> Result<()> {
        validate_op(op, self.num_qubits)?;
        self.apply_op_unchecked(op);
        Ok(())
    }

    fn control_bits(op: &GateOp) -> (Vec<usize>, usize) {
        let mut fixed = Vec::with_capacity(op.controls.len() + 2);
        let mut base = 0;
        for &(q, v) in &op.controls {
            fixed.push(q);
            if v {
                base |= 1 << q;
            }
        }
        (fixed, base)
    }

    fn apply_op_unchecked(&mut self, op: &GateOp) {
        let (mut fixed, base) = Self::control_bits(op);
        match op.kind {
            GateKind::GlobalPhase(w) => {
                let f = Complex64::from_polar(1.0, w);
                if op.controls.is_empty() {
                    self.global_phase *= f;
                } else {
                    let plan = IndexPlan::new(self.num_qubits, &fixed, base);
                    let ptr = SyncPtr(self.amplitudes.as_mut_ptr());
                    for_each_index(plan.count, |x| unsafe { *ptr.at(plan.index(x)) *= f });
                }
            }
            GateKind::Swap => {
                let (a, b) = (op.targets[0], op.targets[1]);
                fixed.push(a);
                fixed.push(b);
                let plan = IndexPlan::new(self.num_qubits, &fixed, base);
                let ptr = SyncPtr(self.amplitudes.as_mut_ptr());
                for_each_index(plan.count, |x| {
                    let i = plan.index(x);
                    unsafe { std::ptr::swap(ptr.at(i | (1 << a)), ptr.at(i | (1 << b))) };
                });
            }
            kind => {
                let t = op.targets[0];
                fixed.push(t);
                let plan = IndexPlan::new(self.num_qubits, &fixed, base);
                let m = kind.matrix().expect("single-qubit kind");
                self.apply_mat2(&plan, t, &m, kind);
            }
        }
    }

    fn apply_mat2(&mut self, plan: &IndexPlan, t: usize, m: &Mat2, kind: GateKind) {
        let ptr = SyncPtr(self.amplitudes.as_mut_ptr());
        let bit = 1usize << t;
        let one = Complex64::new(1.0, 0.0);
        if kind == GateKind::X {
            for_each_index(plan.count, |x| {
                let i = plan.index(x);
                unsafe { std::ptr::swap(ptr.at(i), ptr.at(i | bit)) };
            });
        } else if kind.is_diagonal() {
            let (d0, d1) = (m[0][0], m[1][1]);
            if d0 == one {
                for_each_index(plan.count, |x| unsafe { *ptr.at(plan.index(x) | bit) *= d1 });
            } else {
                for_each_index(plan.count, |x| {
                    let i = plan.index(x);
                    unsafe {
                        *ptr.at(i) *= d0;
                        *ptr.at(i | bit) *= d1;
                    }
                });
            }
        } else {
            let m = *m;
            for_each_index(plan.count, |x| {
                let i = plan.index(x);
                unsafe {
                    let a0 = *ptr.at(i);
                    let a1 = *ptr.at(i | bit);
                    *ptr.at(i) = m[0][0] * a0 + m[0][1] * a1;
                    *ptr.at(i | bit) = m[1][0] * a0 + m[1][1] * a1;
                }
            });
        }
    }

    /// Applies a dense `2^k × 2^k` matrix to `targets` (targets[0] is the
    /// least significant local bit) on the subspace where `controls` hold.
    pub fn apply_dense_controlled(
        &mut self,
        matrix: &ComplexMatrix,
        targets: &[usize],
        controls: &[(usize, bool)],
    ) -> Result<()> {
        let k = targets.len();
        if matrix.rows() != 1 << k || !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: 1 << k, got: matrix.rows() });
        }
        let probe = GateOp { kind: GateKind::GlobalPhase(0.0), targets: Vec::new(), controls: controls.to_vec() };
        validate_op(&probe, self.num_qubits)?;
        for &t in targets {
            if t >= self.num_qubits {
                return Err(Error::QubitOutOfRange { index: t, width: self.num_qubits });
            }
            if controls.iter().any(|c| c.0 == t) || targets.iter().filter(|&&u| u == t).count() > 1 {
                return Err(Error::OverlappingQubits(t));
            }
        }
        let (mut fixed, base) = Self::control_bits(&probe);
        fixed.extend_from_slice(targets);
        let plan = IndexPlan::new(self.num_qubits, &fixed, base);
        let dim = 1usize << k;
        let offsets: Vec<usize> = (0..dim)
            .map(|j| targets.iter().enumerate().filter(|(b, _)| (j >> b) & 1 == 1).map(|(_, &q)| 1 << q).sum())
            .collect();
        let ptr = SyncPtr(self.amplitudes.as_mut_ptr());
        let m = matrix.as_slice();
        for_each_index(plan.count, |x| {
            let i = plan.index(x);
            let local: Vec<Complex64> = offsets.iter().map(|&o| unsafe { *ptr.at(i | o) }).collect();
            for (r, &o) in offsets.iter().enumerate() {
                let row = &m[r * dim..(r + 1) * dim];
                let v: Complex64 = row.iter().zip(&local).map(|(a, b)| a * b).sum();
                unsafe { *ptr.at(i | o) = v };
            }
        });
        Ok(())
    }
}

/// `U · state` for a circuit, returning a new state.
pub fn apply(state: &StateVector, circuit: &Circuit) -> Result<StateVector> {
    let mut s = state.clone();
    s.apply(circuit)?;
    Ok(s)
}
