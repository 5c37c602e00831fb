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

use super::gate::{GateKind, GateOp};
use super::layout::RegisterLayout;
use super::sink::OpSink;
use super::state::StateVector;
use crate::error::{Error, Result};

/// Toffoli steps that fold the first `w + 1` controls into `work[w - 1]`.
fn ladder(controls: &[(usize, bool)], work: &[usize]) -> Vec<GateOp> {
    let w = work.len();
    let mut steps = Vec::with_capacity(w);
    for i in 0..w {
        let first = if i == 0 { controls[0] } else { (work[i - 1], true) };
        steps.push(GateOp::single(GateKind::X, work[i]).with_controls(vec![first, controls[i + 1]]));
    }
    steps
}

/// Emits a group of ops sharing `controls` through one compute/uncompute
/// ladder. Work qubits must start in |0⟩; they end in |0⟩. With fewer than
/// `m - 1` work qubits the ladder is partial and the leftover controls stay on
/// the target gate.
pub fn emit_laddered(
    group: &[GateOp],
    controls: &[(usize, bool)],
    work: &[usize],
    sink: &mut impl OpSink,
) {
    let m = controls.len();
    let w = m.saturating_sub(1).min(work.len());
    if w == 0 {
        for op in group {
            sink.push(op.clone().with_controls(controls.to_vec()));
        }
        return;
    }
    let steps = ladder(controls, &work[..w]);
    for s in &steps {
        sink.push(s.clone());
    }
    let mut target_controls = vec![(work[w - 1], true)];
    target_controls.extend_from_slice(&controls[w + 1..]);
    for op in group {
        sink.push(op.clone().with_controls(target_controls.clone()));
    }
    for s in steps.iter().rev() {
        sink.push(s.clone());
    }
}

/// Strict ladder for one gate: exactly `2(m-1)` Toffolis and one
/// singly-controlled target gate.
pub fn multi_controlled_ops(gate: &GateOp, controls: &[(usize, bool)], work: &[usize]) -> Result<Vec<GateOp>> {
    let needed = controls.len().saturating_sub(1);
    if work.len() < needed {
        return Err(Error::InsufficientWorkQubits { needed, available: work.len() });
    }
    let mut ops = Vec::new();
    emit_laddered(std::slice::from_ref(&GateOp { controls: Vec::new(), ..gate.clone() }), controls, &work[..needed], &mut ops);
    Ok(ops)
}

/// Applies `gate` controlled on `controls` using the layout's work pool.
pub fn apply_multi_controlled(
    state: &mut StateVector,
    gate: &GateOp,
    controls: &[(usize, bool)],
    layout: &RegisterLayout,
) -> Result<()> {
    let ops = multi_controlled_ops(gate, controls, &layout.work_pool())?;
    state.apply_ops(&ops)
}

/// Streaming pass that replaces native multi-controls by work-register
/// ladders. Consecutive ops with identical controls share one ladder.
pub struct Lowering<S: OpSink> {
    work: Vec<usize>,
    group: Vec<GateOp>,
    controls: Vec<(usize, bool)>,
    inner: S,
}

impl<S: OpSink> Lowering<S> {
    pub fn new(work: Vec<usize>, inner: S) -> Self {
        Self { work, group: Vec::new(), controls: Vec::new(), inner }
    }

    fn flush(&mut self) {
        if self.group.is_empty() {
            return;
        }
        let group = std::mem::take(&mut self.group);
        // A lone Toffoli is cheaper native than through a ladder.
        if self.controls.len() == 2 && group.len() == 1 && group[0].kind == GateKind::X {
            self.inner.push(group[0].clone().with_controls(self.controls.clone()));
            return;
        }
        emit_laddered(&group, &self.controls, &self.work, &mut self.inner);
    }

    pub fn finish(mut self) -> S {
        self.flush();
        self.inner
    }
}

impl<S: OpSink> OpSink for Lowering<S> {
    fn push(&mut self, op: GateOp) {
        if op.controls.len() <= 1 {
            self.flush();
            self.inner.push(op);
            return;
        }
        if op.controls != self.controls {
            self.flush();
            self.controls = op.controls.clone();
        }
        self.group.push(GateOp { controls: Vec::new(), ..op });
    }
}

/// Lowers a whole op list.
pub fn lower(ops: &[GateOp], work: &[usize]) -> Vec<GateOp> {
    let mut l = Lowering::new(work.to_vec(), Vec::new());
    for op in ops {
        l.push(op.clone());
    }
    l.finish()
}
