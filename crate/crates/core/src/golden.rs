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

//! Hand-transcribed gate list for the 2×2 walk solver at seven qubits
//! (`n = 1`, two phase bits), kept independent of the circuit builders so it
//! can serve as a regression reference.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{lu_solve, ComplexMatrix, ComplexVector};
use crate::sim::{Circuit, GateKind, GateOp, StateVector};
use crate::solver::{run_walk, SolverConfig};
use crate::sysprep::{prepare, PrepareOptions, PreparedSystem};

pub const GOLDEN_QUBITS: usize = 7;

const R1: usize = 0;
const R1A: usize = 1;
const R2: usize = 2;
const R2A: usize = 3;
const PHASE: [usize; 2] = [4, 5];
const HHL: usize = 6;

/// Qiskit-style `gate.control(m, None, state)`: the first `m` qubits are
/// controls, and the rightmost character of `state` belongs to the first one.
fn ctl(kind: GateKind, state: &str, qubits: &[usize]) -> GateOp {
    let bits: Vec<bool> = state.chars().rev().map(|ch| ch == '1').collect();
    let m = bits.len();
    let controls = qubits[..m].iter().copied().zip(bits).collect();
    GateOp { kind, targets: qubits[m..].to_vec(), controls }
}

fn h(q: usize) -> GateOp {
    GateOp::single(GateKind::H, q)
}

/// One controlled walk step on phase qubit `p`, in listing order.
fn walk_step(p: usize, ops: &mut Vec<GateOp>) {
    use GateKind::*;
    ops.push(ctl(H, "01", &[p, R1A, R2]));
    ops.push(ctl(X, "11", &[p, R1A, R2A]));
    ops.push(ctl(Z, "1", &[p, R2]));
    ops.push(ctl(X, "1", &[p, R2]));
    ops.push(ctl(Z, "1", &[p, R2]));
    ops.push(ctl(X, "1", &[p, R2]));
    ops.push(ctl(X, "01", &[p, R2, R2A]));
    ops.push(ctl(Z, "01", &[p, R2, R2A]));
    ops.push(ctl(X, "01", &[p, R2, R2A]));
    ops.push(ctl(H, "01", &[p, R1A, R2]));
    ops.push(ctl(X, "11", &[p, R1A, R2A]));
    ops.push(ctl(Swap, "1", &[p, R1, R2]));
    ops.push(ctl(Swap, "1", &[p, R1A, R2A]));
    ops.push(ctl(S, "1", &[p, R1]));
    ops.push(ctl(X, "1", &[p, R1]));
    ops.push(ctl(S, "1", &[p, R1]));
    ops.push(ctl(X, "1", &[p, R1]));
}

/// The inverse walk step as listed (not derived from [`walk_step`]).
fn walk_step_inverse(p: usize, ops: &mut Vec<GateOp>) {
    use GateKind::*;
    ops.push(ctl(X, "1", &[p, R1]));
    ops.push(ctl(Sdg, "1", &[p, R1]));
    ops.push(ctl(X, "1", &[p, R1]));
    ops.push(ctl(Sdg, "1", &[p, R1]));
    ops.push(ctl(Swap, "1", &[p, R1A, R2A]));
    ops.push(ctl(Swap, "1", &[p, R1, R2]));
    ops.push(ctl(X, "11", &[p, R1A, R2A]));
    ops.push(ctl(H, "01", &[p, R1A, R2]));
    ops.push(ctl(X, "01", &[p, R2, R2A]));
    ops.push(ctl(Z, "01", &[p, R2, R2A]));
    ops.push(ctl(X, "01", &[p, R2, R2A]));
    ops.push(ctl(X, "1", &[p, R2]));
    ops.push(ctl(Z, "1", &[p, R2]));
    ops.push(ctl(X, "1", &[p, R2]));
    ops.push(ctl(Z, "1", &[p, R2]));
    ops.push(ctl(X, "11", &[p, R1A, R2A]));
    ops.push(ctl(H, "01", &[p, R1A, R2]));
}

/// Parameters of the listed sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ListedSequence {
    pub c: f64,
    pub x: f64,
    pub d: f64,
}

impl Default for ListedSequence {
    fn default() -> Self {
        Self { c: 1.0, x: 2.0, d: 3.0 }
    }
}

impl ListedSequence {
    pub fn circuit(&self) -> Circuit {
        self.build(false)
    }

    /// Same sequence with the first `S` replaced by `S†`.
    pub fn mutated(&self) -> Circuit {
        self.build(true)
    }

    fn build(&self, mutate: bool) -> Circuit {
        let Self { c, x, d } = *self;
        let [p0, p1] = PHASE;
        let mut ops = vec![h(R2)];
        ops.push(h(p0));
        ops.push(h(p1));
        walk_step(p0, &mut ops);
        walk_step(p1, &mut ops);
        walk_step(p1, &mut ops);
        ops.push(GateOp::swap(p0, p1));
        ops.push(h(p0));
        ops.push(GateOp::single(GateKind::Phase(-std::f64::consts::FRAC_PI_2), p1).controlled(&[(p0, true)]));
        ops.push(h(p1));
        let ry = |lam: f64| GateKind::Ry(2.0 * (c / lam).acos());
        ops.push(ctl(ry(-d), "00", &[p0, p1, HHL]));
        ops.push(ctl(ry(x - d), "01", &[p0, p1, HHL]));
        ops.push(ctl(ry(-d), "10", &[p0, p1, HHL]));
        ops.push(ctl(ry(-x - d), "11", &[p0, p1, HHL]));
        ops.push(h(p1));
        ops.push(GateOp::single(GateKind::Phase(std::f64::consts::FRAC_PI_2), p1).controlled(&[(p0, true)]));
        ops.push(h(p0));
        ops.push(GateOp::swap(p0, p1));
        walk_step_inverse(p1, &mut ops);
        walk_step_inverse(p1, &mut ops);
        walk_step_inverse(p0, &mut ops);
        ops.push(h(p1));
        ops.push(h(p0));
        ops.push(h(R2));
        if mutate {
            let first_s = ops.iter().position(|op| op.kind == GateKind::S).expect("sequence has S gates");
            ops[first_s].kind = GateKind::Sdg;
        }
        Circuit::new(GOLDEN_QUBITS, ops).expect("listing fits seven qubits")
    }
}

/// The 2×2 system the listing solves.
pub fn listed_system() -> (ComplexMatrix, ComplexVector) {
    (ComplexMatrix::from_real_rows(&[&[-2.0, 1.0], &[1.0, -2.0]]), ComplexVector::from_real(&[0.0, 1.0]))
}

pub fn listed_prepared() -> Result<PreparedSystem> {
    let (a, b) = listed_system();
    prepare(&a, &b, &PrepareOptions { d: Some(3.0), ..Default::default() })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenReport {
    /// Largest amplitude difference to the built pipeline, up to global phase.
    pub max_deviation: f64,
    /// Postselected solution of the listed sequence.
    pub solution: ComplexVector,
    /// `‖x − x_ref‖ / ‖x_ref‖` against the LU solution.
    pub relative_error: f64,
}

/// Runs `circuit` on `|b⟩` and compares it with the pipeline state.
pub fn compare_with_pipeline(circuit: &Circuit, seq: &ListedSequence) -> Result<GoldenReport> {
    let prepared = listed_prepared()?;
    let mut state = StateVector::embed(GOLDEN_QUBITS, &prepared.b)?;
    state.apply(circuit)?;
    let run = run_walk(&prepared, &SolverConfig::new(2).with_c(seq.c))?;
    let max_deviation = state.max_deviation_up_to_phase(&run.state);
    let amps = ComplexVector::from_vec((0..prepared.dim).map(|i| state.amplitude(i)).collect());
    let solution = amps.scale((1.0 / seq.c).into());
    let (a, b) = listed_system();
    let reference = lu_solve(&a, &b)?;
    let relative_error = solution.sub(&reference).norm() / reference.norm();
    Ok(GoldenReport { max_deviation, solution, relative_error })
}

/// Listed sequence against the pipeline with the default parameters.
pub fn golden_report() -> Result<GoldenReport> {
    let seq = ListedSequence::default();
    compare_with_pipeline(&seq.circuit(), &seq)
}
