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

use super::circuit::Circuit;
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

pub const MAX_DENSE_QUBITS: usize = 14;

/// Full unitary of `circuit`, including its global phase. Column `j` is the
/// image of basis state `j`.
pub fn dense_unitary(circuit: &Circuit) -> Result<ComplexMatrix> {
    let q = circuit.num_qubits();
    if q > MAX_DENSE_QUBITS {
        return Err(Error::TooWide(q, MAX_DENSE_QUBITS));
    }
    let dim = 1usize << q;
    let mut u = ComplexMatrix::zeros(dim, dim);
    for j in 0..dim {
        let mut s = StateVector::basis_state(q, j);
        s.apply(circuit)?;
        for (i, a) in s.amplitudes().into_iter().enumerate() {
            u[(i, j)] = a;
        }
    }
    Ok(u)
}
