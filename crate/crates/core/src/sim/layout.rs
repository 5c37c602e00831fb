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

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Qubit assignment for the solver registers. Qubit 0 is the least
/// significant bit of a basis-state index.
///
/// Order: `r1`, `r1a`, `r2`, `r2a`, `phase`, `hhl`, `work1`, `work2`. The work
/// registers sit at the top so the solver can be simulated without them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegisterLayout {
    pub n: usize,
    pub n_phase: usize,
    pub r1: Vec<usize>,
    pub r1_ancilla: usize,
    pub r2: Vec<usize>,
    pub r2_ancilla: usize,
    pub phase: Vec<usize>,
    pub hhl_ancilla: usize,
    pub work1: Vec<usize>,
    pub work2: Vec<usize>,
}

impl RegisterLayout {
    pub fn new(n: usize, n_phase: usize) -> Result<Self> {
        if n_phase == 0 {
            return Err(Error::InvalidPhaseBits);
        }
        let mut next = 0;
        let mut take = |k: usize| {
            let v: Vec<usize> = (next..next + k).collect();
            next += k;
            v
        };
        let r1 = take(n);
        let r1_ancilla = take(1)[0];
        let r2 = take(n);
        let r2_ancilla = take(1)[0];
        let phase = take(n_phase);
        let hhl_ancilla = take(1)[0];
        let w = n.saturating_sub(1);
        let work1 = take(w);
        let work2 = take(w);
        Ok(Self { n, n_phase, r1, r1_ancilla, r2, r2_ancilla, phase, hhl_ancilla, work1, work2 })
    }

    /// `4n + n_p + 1` for `n ≥ 1`.
    pub fn total_qubits(&self) -> usize {
        2 * self.n + 3 + self.n_phase + self.work1.len() + self.work2.len()
    }

    /// Width without the work registers, for direct simulation of native
    /// multi-controlled gates.
    pub fn logical_qubits(&self) -> usize {
        2 * self.n + 3 + self.n_phase
    }

    /// Work qubits in borrow order: the first register, then the second.
    pub fn work_pool(&self) -> Vec<usize> {
        self.work1.iter().chain(&self.work2).copied().collect()
    }

    /// r1 followed by its ancilla: the augmented index `j + N·a`.
    pub fn r1_aug(&self) -> Vec<usize> {
        let mut v = self.r1.clone();
        v.push(self.r1_ancilla);
        v
    }

    pub fn r2_aug(&self) -> Vec<usize> {
        let mut v = self.r2.clone();
        v.push(self.r2_ancilla);
        v
    }

    pub fn all_indices(&self) -> Vec<usize> {
        let mut v = self.r1_aug();
        v.extend(self.r2_aug());
        v.extend(&self.phase);
        v.push(self.hhl_ancilla);
        v.extend(&self.work1);
        v.extend(&self.work2);
        v
    }
}

/// Controls requiring `register` to hold `value` (bit `i` of value on `register[i]`).
pub fn value_controls(register: &[usize], value: usize) -> Vec<(usize, bool)> {
    register.iter().enumerate().map(|(i, &q)| (q, (value >> i) & 1 == 1)).collect()
}
