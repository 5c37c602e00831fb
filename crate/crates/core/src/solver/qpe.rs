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

use std::f64::consts::PI;

use crate::error::Result;
use crate::sim::{Circuit, GateKind, GateOp, OpSink};
use crate::walk::WalkOperator;

/// A unitary that can be emitted with one extra control qubit.
pub trait ControlledBlock {
    fn controlled_ops(&self, control: usize) -> Vec<GateOp>;
}

impl ControlledBlock for WalkOperator {
    fn controlled_ops(&self, control: usize) -> Vec<GateOp> {
        self.ops(Some(control))
    }
}

impl ControlledBlock for Circuit {
    fn controlled_ops(&self, control: usize) -> Vec<GateOp> {
        self.ops().iter().map(|op| op.clone().controlled(&[(control, true)])).collect()
    }
}

/// Inverse QFT on `phase` (qubit 0 least significant): swaps first, then
/// `H` and negative controlled phases from the low qubit up.
pub fn emit_inverse_qft(phase: &[usize], sink: &mut impl OpSink) {
    let m = phase.len();
    for i in 0..m / 2 {
        sink.push(GateOp::swap(phase[i], phase[m - 1 - i]));
    }
    for j in 0..m {
        for k in 0..j {
            let angle = -PI / (1u64 << (j - k)) as f64;
            sink.push(GateOp::single(GateKind::Phase(angle), phase[j]).controlled(&[(phase[k], true)]));
        }
        sink.push(GateOp::single(GateKind::H, phase[j]));
    }
}

/// Forward QFT, the exact inverse of [`emit_inverse_qft`].
pub fn emit_qft(phase: &[usize], sink: &mut impl OpSink) {
    let mut ops = Vec::new();
    emit_inverse_qft(phase, &mut ops);
    for op in ops.iter().rev() {
        sink.push(op.inverse());
    }
}

/// Phase estimation: Hadamards, `2^a` repetitions of the controlled block on
/// phase qubit `a`, then the inverse QFT.
pub fn emit_qpe(block: &impl ControlledBlock, phase: &[usize], sink: &mut impl OpSink) {
    for &p in phase {
        sink.push(GateOp::single(GateKind::H, p));
    }
    for (a, &p) in phase.iter().enumerate() {
        let one = block.controlled_ops(p);
        for _ in 0..(1usize << a) {
            for op in &one {
                sink.push(op.clone());
            }
        }
    }
    emit_inverse_qft(phase, sink);
}

/// Exact inverse of [`emit_qpe`].
pub fn emit_qpe_inverse(block: &impl ControlledBlock, phase: &[usize], sink: &mut impl OpSink) {
    emit_qft(phase, sink);
    for (a, &p) in phase.iter().enumerate().rev() {
        let inv: Vec<GateOp> = block.controlled_ops(p).iter().rev().map(GateOp::inverse).collect();
        for _ in 0..(1usize << a) {
            for op in &inv {
                sink.push(op.clone());
            }
        }
    }
    for &p in phase.iter().rev() {
        sink.push(GateOp::single(GateKind::H, p));
    }
}

/// QPE circuit of width `num_qubits` for `block` with the given phase register.
pub fn build_qpe(block: &impl ControlledBlock, phase: &[usize], num_qubits: usize) -> Result<Circuit> {
    let mut ops = Vec::new();
    emit_qpe(block, phase, &mut ops);
    Circuit::new(num_qubits, ops)
}
