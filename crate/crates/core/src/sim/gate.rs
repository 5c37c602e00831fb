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

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// 2x2 matrix, row-major.
pub type Mat2 = [[Complex64; 2]; 2];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    Ry(f64),
    Rz(f64),
    Phase(f64),
    SqrtX,
    SqrtXdg,
    /// Two targets.
    Swap,
    /// No targets; a scalar `e^{iω}`. With controls it is a phase on the control subspace.
    GlobalPhase(f64),
}

impl GateKind {
    pub fn num_targets(&self) -> usize {
        match self {
            GateKind::Swap => 2,
            GateKind::GlobalPhase(_) => 0,
            _ => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::S => "S",
            GateKind::Sdg => "Sdg",
            GateKind::T => "T",
            GateKind::Tdg => "Tdg",
            GateKind::Ry(_) => "RY",
            GateKind::Rz(_) => "RZ",
            GateKind::Phase(_) => "P",
            GateKind::SqrtX => "SX",
            GateKind::SqrtXdg => "SXdg",
            GateKind::Swap => "SWAP",
            GateKind::GlobalPhase(_) => "GPHASE",
        }
    }

    pub fn param(&self) -> Option<f64> {
        match *self {
            GateKind::Ry(t) | GateKind::Rz(t) | GateKind::Phase(t) | GateKind::GlobalPhase(t) => Some(t),
            _ => None,
        }
    }

    pub fn inverse(&self) -> GateKind {
        match *self {
            GateKind::S => GateKind::Sdg,
            GateKind::Sdg => GateKind::S,
            GateKind::T => GateKind::Tdg,
            GateKind::Tdg => GateKind::T,
            GateKind::SqrtX => GateKind::SqrtXdg,
            GateKind::SqrtXdg => GateKind::SqrtX,
            GateKind::Ry(t) => GateKind::Ry(-t),
            GateKind::Rz(t) => GateKind::Rz(-t),
            GateKind::Phase(t) => GateKind::Phase(-t),
            GateKind::GlobalPhase(t) => GateKind::GlobalPhase(-t),
            k => k,
        }
    }

    /// Single-qubit matrix; `None` for `Swap` and `GlobalPhase`.
    pub fn matrix(&self) -> Option<Mat2> {
        let c = Complex64::new;
        let z = c(0.0, 0.0);
        let o = c(1.0, 0.0);
        let m = match *self {
            GateKind::H => {
                let h = c(FRAC_1_SQRT_2, 0.0);
                [[h, h], [h, -h]]
            }
            GateKind::X => [[z, o], [o, z]],
            GateKind::Y => [[z, c(0.0, -1.0)], [c(0.0, 1.0), z]],
            GateKind::Z => [[o, z], [z, -o]],
            GateKind::S => [[o, z], [z, c(0.0, 1.0)]],
            GateKind::Sdg => [[o, z], [z, c(0.0, -1.0)]],
            GateKind::T => [[o, z], [z, Complex64::from_polar(1.0, FRAC_PI_4)]],
            GateKind::Tdg => [[o, z], [z, Complex64::from_polar(1.0, -FRAC_PI_4)]],
            GateKind::Ry(t) => {
                let (s, co) = (0.5 * t).sin_cos();
                [[c(co, 0.0), c(-s, 0.0)], [c(s, 0.0), c(co, 0.0)]]
            }
            GateKind::Rz(t) => [[Complex64::from_polar(1.0, -0.5 * t), z], [z, Complex64::from_polar(1.0, 0.5 * t)]],
            GateKind::Phase(t) => [[o, z], [z, Complex64::from_polar(1.0, t)]],
            GateKind::SqrtX => [[c(0.5, 0.5), c(0.5, -0.5)], [c(0.5, -0.5), c(0.5, 0.5)]],
            GateKind::SqrtXdg => [[c(0.5, -0.5), c(0.5, 0.5)], [c(0.5, 0.5), c(0.5, -0.5)]],
            GateKind::Swap | GateKind::GlobalPhase(_) => return None,
        };
        Some(m)
    }

    /// Diagonal single-qubit kinds act without mixing amplitudes.
    pub fn is_diagonal(&self) -> bool {
        matches!(
            self,
            GateKind::Z | GateKind::S | GateKind::Sdg | GateKind::T | GateKind::Tdg | GateKind::Rz(_) | GateKind::Phase(_)
        )
    }
}

/// One gate application. Controls carry the value (`true` = |1⟩) they must hold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateOp {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<(usize, bool)>,
}

impl GateOp {
    pub fn new(kind: GateKind, targets: Vec<usize>) -> Self {
        Self { kind, targets, controls: Vec::new() }
    }

    pub fn single(kind: GateKind, target: usize) -> Self {
        Self::new(kind, vec![target])
    }

    pub fn global_phase(omega: f64) -> Self {
        Self::new(GateKind::GlobalPhase(omega), Vec::new())
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::new(GateKind::Swap, vec![a, b])
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Self::single(GateKind::X, target).controlled(&[(control, true)])
    }

    /// Appends controls to this op.
    pub fn controlled(mut self, controls: &[(usize, bool)]) -> Self {
        self.controls.extend_from_slice(controls);
        self
    }

    pub fn with_controls(mut self, controls: Vec<(usize, bool)>) -> Self {
        self.controls = controls;
        self
    }

    pub fn inverse(&self) -> Self {
        Self { kind: self.kind.inverse(), targets: self.targets.clone(), controls: self.controls.clone() }
    }

    pub fn qubits(&self) -> impl Iterator<Item = usize> + '_ {
        self.targets.iter().copied().chain(self.controls.iter().map(|c| c.0))
    }

    pub fn max_qubit(&self) -> Option<usize> {
        self.qubits().max()
    }
}

pub(crate) fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub(crate) fn mat2_adjoint(a: &Mat2) -> Mat2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}
