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

use std::f64::consts::{FRAC_PI_2, PI};

use super::angles::{WalkAngles, ANGLE_EPS};
use crate::error::Result;
use crate::sim::{value_controls, Circuit, GateKind, GateOp, OpSink, RegisterLayout};
use crate::sysprep::PreparedSystem;

/// Rotation block for entry `(j, k)` on ancilla `anc`: undo the preamble X,
/// rotate, then phase the |0⟩ branch with `X·P(ω)·X`.
fn entry_block(angles: &WalkAngles, j: usize, k: usize, anc: usize, controls: &[(usize, bool)], sink: &mut impl OpSink) {
    let x = || GateOp::single(GateKind::X, anc).with_controls(controls.to_vec());
    sink.push(x());
    let theta = angles.theta(j, k);
    if theta > ANGLE_EPS {
        sink.push(GateOp::single(GateKind::Ry(2.0 * theta), anc).with_controls(controls.to_vec()));
    }
    let omega = angles.omega(j, k);
    if omega.abs() > ANGLE_EPS {
        sink.push(x());
        sink.push(GateOp::single(GateKind::Phase(omega), anc).with_controls(controls.to_vec()));
        sink.push(x());
    }
}

/// `B_j` on a local `n+1` qubit register (qubit `n` is the ancilla).
pub fn build_bj(prepared: &PreparedSystem, j: usize) -> Result<Circuit> {
    let angles = WalkAngles::new(prepared)?;
    let n = prepared.n;
    let main: Vec<usize> = (0..n).collect();
    let mut ops: Vec<GateOp> = main.iter().map(|&q| GateOp::single(GateKind::H, q)).collect();
    ops.push(GateOp::single(GateKind::X, n));
    for k in 0..prepared.dim {
        if angles.is_nonzero(j, k) {
            entry_block(&angles, j, k, n, &value_controls(&main, k), &mut ops);
        }
    }
    Circuit::new(n + 1, ops)
}

/// `B′`: a single X on the ancilla.
pub fn build_bprime(n: usize) -> Circuit {
    Circuit::new(n + 1, vec![GateOp::single(GateKind::X, n)]).expect("valid")
}

/// Shared body of `T0`: Hadamards on r2 when r1a = 0, then every entry block
/// controlled on `|j, 0⟩|k⟩`. `flip` is the X on the r2 ancilla; with
/// `with_bprime` it is unconditional, merging the `B′` branch for r1a = 1.
fn append_t0(angles: &WalkAngles, layout: &RegisterLayout, with_bprime: bool, sink: &mut impl OpSink) {
    let r1a_zero = (layout.r1_ancilla, false);
    for &q in &layout.r2 {
        sink.push(GateOp::single(GateKind::H, q).with_controls(vec![r1a_zero]));
    }
    let flip = GateOp::single(GateKind::X, layout.r2_ancilla);
    sink.push(if with_bprime { flip } else { flip.with_controls(vec![r1a_zero]) });
    for j in 0..angles.dim {
        let mut row_controls = value_controls(&layout.r1, j);
        row_controls.push(r1a_zero);
        for k in 0..angles.dim {
            if !angles.is_nonzero(j, k) {
                continue;
            }
            let mut controls = row_controls.clone();
            controls.extend(value_controls(&layout.r2, k));
            entry_block(angles, j, k, layout.r2_ancilla, &controls, sink);
        }
    }
}

/// `T0`: applies `B_j` to r2 when r1 holds `|j, 0⟩`. The `B′` branch is
/// omitted since the input ancilla is always |0⟩.
pub fn build_t0(prepared: &PreparedSystem, layout: &RegisterLayout) -> Result<Circuit> {
    let angles = WalkAngles::new(prepared)?;
    let mut ops = Vec::new();
    append_t0(&angles, layout, false, &mut ops);
    Circuit::with_layout(layout.total_qubits(), ops, layout.clone())
}

pub(crate) fn t0_ops(angles: &WalkAngles, layout: &RegisterLayout, with_bprime: bool) -> Vec<GateOp> {
    let mut ops = Vec::new();
    append_t0(angles, layout, with_bprime, &mut ops);
    ops
}

/// `2|0⟩⟨0| − I` on `qubits` (last one is the flip target), optionally
/// controlled on `control`.
fn reflect_zero(qubits: &[usize], control: Option<usize>, sink: &mut impl OpSink) {
    let (target, rest) = qubits.split_last().expect("non-empty register");
    let mut controls: Vec<(usize, bool)> = rest.iter().map(|&q| (q, false)).collect();
    let extra: Vec<(usize, bool)> = control.map(|p| (p, true)).into_iter().collect();
    controls.extend(&extra);
    sink.push(GateOp::single(GateKind::X, *target));
    sink.push(GateOp::single(GateKind::Z, *target).with_controls(controls));
    sink.push(GateOp::single(GateKind::X, *target));
    sink.push(GateOp::global_phase(PI).with_controls(extra));
}

/// `P (2|0⟩⟨0| − I) P†` where `P` is `prep`: reflection about `P|0⟩`.
pub fn build_reflector(prep: &Circuit) -> Circuit {
    let qubits: Vec<usize> = (0..prep.num_qubits()).collect();
    let mut ops: Vec<GateOp> = prep.inverse().into_ops();
    reflect_zero(&qubits, None, &mut ops);
    ops.extend(prep.ops().iter().cloned());
    Circuit::new(prep.num_qubits(), ops).expect("same register")
}

/// Reusable emitter for `W = iS(2TT† − I)` and its controlled form.
#[derive(Debug, Clone)]
pub struct WalkOperator {
    layout: RegisterLayout,
    t0: Vec<GateOp>,
    t0_inv: Vec<GateOp>,
}

impl WalkOperator {
    pub fn new(prepared: &PreparedSystem, layout: &RegisterLayout) -> Result<Self> {
        let angles = WalkAngles::new(prepared)?;
        let t0 = t0_ops(&angles, layout, true);
        let t0_inv = t0.iter().rev().map(GateOp::inverse).collect();
        Ok(Self { layout: layout.clone(), t0, t0_inv })
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    /// Emits `W`, or `W` controlled on qubit `control`. Only the reflection
    /// core, the swaps and the phases take the control; the surrounding
    /// `T0 … T0†` pair cancels when the control is off.
    pub fn emit(&self, control: Option<usize>, sink: &mut impl OpSink) {
        for op in &self.t0_inv {
            sink.push(op.clone());
        }
        reflect_zero(&self.layout.r2_aug(), control, sink);
        for op in &self.t0 {
            sink.push(op.clone());
        }
        let ctl: Vec<(usize, bool)> = control.map(|p| (p, true)).into_iter().collect();
        for (&a, &b) in self.layout.r1_aug().iter().zip(&self.layout.r2_aug()) {
            sink.push(GateOp::swap(a, b).with_controls(ctl.clone()));
        }
        sink.push(GateOp::global_phase(FRAC_PI_2).with_controls(ctl));
    }

    pub fn ops(&self, control: Option<usize>) -> Vec<GateOp> {
        let mut ops = Vec::new();
        self.emit(control, &mut ops);
        ops
    }
}

/// `W` as a circuit over the full layout.
pub fn build_w(prepared: &PreparedSystem, layout: &RegisterLayout) -> Result<Circuit> {
    let w = WalkOperator::new(prepared, layout)?;
    Circuit::with_layout(layout.total_qubits(), w.ops(None), layout.clone())
}
