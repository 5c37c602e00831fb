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

use thiserror::Error;

/// Errors raised by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular (pivot {0:.3e})")]
    Singular(f64),
    #[error("GMRES breakdown at iteration {0}")]
    Breakdown(usize),
    #[error("non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("qubit index {index} out of range for width {width}")]
    QubitOutOfRange { index: usize, width: usize },
    #[error("qubit {0} used as both target and control, or repeated")]
    OverlappingQubits(usize),
    #[error("width mismatch: state has {state} qubits, circuit has {circuit}")]
    WidthMismatch { state: usize, circuit: usize },
    #[error("circuit too wide for dense unitary ({0} > {1} qubits)")]
    TooWide(usize, usize),
    #[error("need {needed} work qubits, only {available} available")]
    InsufficientWorkQubits { needed: usize, available: usize },
    #[error("state norm {0} differs from one")]
    NotNormalized(f64),
    #[error("right-hand side is the zero vector")]
    ZeroRhs,
    #[error("matrix is zero; normalization bound X vanishes")]
    ZeroMatrix,
    #[error("diagonal entry {0} is a negative real; shift the system first")]
    NegativeDiagonal(usize),
    #[error("matrix dimension {0} exceeds the dense-oracle limit {1}")]
    TooLarge(usize, usize),
    #[error("diagonal shift {0} is negative or leaves a negative diagonal")]
    InvalidShift(f64),
    #[error("invalid rotation constant C = {0}")]
    InvalidC(f64),
    #[error("phase register must have at least one qubit")]
    InvalidPhaseBits,
    #[error("postselected branch norm {0:.3e} is effectively zero")]
    ZeroSuccessProbability(f64),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("I/O error: {0}")]
    Io(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
