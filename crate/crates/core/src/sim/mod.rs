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

//! Statevector simulator, circuit IR, multi-control lowering and the basis
//! transpiler used for gate counting.

mod circuit;
mod control;
mod dense;
pub mod dump;
mod gate;
mod layout;
mod sink;
mod state;
mod transpile;

pub use circuit::Circuit;
pub use control::{apply_multi_controlled, emit_laddered, lower, multi_controlled_ops, Lowering};
pub use dense::{dense_unitary, MAX_DENSE_QUBITS};
pub use gate::{GateKind, GateOp, Mat2};
pub use layout::{value_controls, RegisterLayout};
pub use sink::OpSink;
pub use state::{apply, StateVector};
pub use transpile::{
    basis_name, count_basis, decompose_to_basis, sqrt_unitary, synth_1q, zyz, BasisTranspiler,
    GateCountReport, GateCounter,
};
