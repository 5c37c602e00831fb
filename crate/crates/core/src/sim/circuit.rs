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

use super::gate::GateOp;
use super::layout::RegisterLayout;
use crate::error::{Error, Result};

/// Validated, immutable gate sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    ops: Vec<GateOp>,
    layout: Option<RegisterLayout>,
}

pub(crate) fn validate_op(op: &GateOp, width: usize) -> Result<()> {
    if op.targets.len() != op.kind.num_targets() {
        return Err(Error::DimensionMismatch { expected: op.kind.num_targets(), got: op.targets.len() });
    }
    let mut seen: Vec<usize> = Vec::with_capacity(op.targets.len() + op.controls.len());
    for q in op.qubits() {
        if q >= width {
            return Err(Error::QubitOutOfRange { index: q, width });
        }
        if seen.contains(&q) {
            return Err(Error::OverlappingQubits(q));
        }
        seen.push(q);
    }
    Ok(())
}

impl Circuit {
    pub fn new(num_qubits: usize, ops: Vec<GateOp>) -> Result<Self> {
        for op in &ops {
            validate_op(op, num_qubits)?;
        }
        Ok(Self { num_qubits, ops, layout: None })
    }

    pub fn with_layout(num_qubits: usize, ops: Vec<GateOp>, layout: RegisterLayout) -> Result<Self> {
        let mut c = Self::new(num_qubits, ops)?;
        c.layout = Some(layout);
        Ok(c)
    }

    pub fn empty(num_qubits: usize) -> Self {
        Self { num_qubits, ops: Vec::new(), layout: None }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn layout(&self) -> Option<&RegisterLayout> {
        self.layout.as_ref()
    }

    pub fn into_ops(self) -> Vec<GateOp> {
        self.ops
    }

    /// Adjoint circuit: reversed order, each op inverted.
    pub fn inverse(&self) -> Self {
        Self {
            num_qubits: self.num_qubits,
            ops: self.ops.iter().rev().map(GateOp::inverse).collect(),
            layout: self.layout.clone(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Circuit) -> Result<Self> {
        let width = self.num_qubits.max(other.num_qubits);
        let mut ops = self.ops.clone();
        ops.extend(other.ops.iter().cloned());
        Ok(Self { num_qubits: width, ops, layout: self.layout.clone().or_else(|| other.layout.clone()) })
    }

    /// Same ops on a wider register.
    pub fn widened(&self, num_qubits: usize) -> Result<Self> {
        let mut c = Self::new(num_qubits, self.ops.clone())?;
        c.layout = self.layout.clone();
        Ok(c)
    }

    /// Every op gains the extra controls. A bare global phase becomes a
    /// phase on the control subspace, which is the same thing.
    pub fn controlled(&self, controls: &[(usize, bool)]) -> Result<Self> {
        let ops = self.ops.iter().map(|op| op.clone().controlled(controls)).collect();
        let mut c = Self::new(self.num_qubits, ops)?;
        c.layout = self.layout.clone();
        Ok(c)
    }

    /// Remaps qubit `q` to `map[q]`.
    pub fn remapped(&self, num_qubits: usize, map: &[usize]) -> Result<Self> {
        let ops = self
            .ops
            .iter()
            .map(|op| GateOp {
                kind: op.kind,
                targets: op.targets.iter().map(|&q| map[q]).collect(),
                controls: op.controls.iter().map(|&(q, v)| (map[q], v)).collect(),
            })
            .collect();
        Self::new(num_qubits, ops)
    }
}
