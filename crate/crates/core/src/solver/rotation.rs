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

use crate::error::{Error, Result};
use crate::sim::{value_controls, Circuit, GateKind, GateOp, OpSink};

/// Walk-variant eigenvalue estimate for phase bin `k`: `X sin(2πk/N_p) − d`.
pub fn lambda_tilde(k: usize, n_p: usize, x: f64, d: f64) -> f64 {
    x * (2.0 * PI * k as f64 / (1u64 << n_p) as f64).sin() - d
}

/// Canonical-variant estimate: `2πk/N_p` up to `N_p/2`, then wrapped negative.
pub fn canonical_lambda_tilde(k: usize, n_p: usize) -> f64 {
    let np = (1u64 << n_p) as f64;
    let k = k as f64;
    if k <= np / 2.0 {
        2.0 * PI * k / np
    } else {
        2.0 * PI * (k / np - 1.0)
    }
}

/// Eigenvalue estimates per phase bin; `None` marks a skipped bin.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationTable {
    pub lambdas: Vec<Option<f64>>,
}

impl RotationTable {
    /// Walk table. Bins with `|λ̃| < 1e-12·(X + d)` are treated as zero.
    pub fn walk(n_p: usize, x: f64, d: f64) -> Self {
        let zero = 1e-12 * (x + d.abs());
        let lambdas = (0..1usize << n_p)
            .map(|k| Some(lambda_tilde(k, n_p, x, d)).filter(|l| l.abs() >= zero))
            .collect();
        Self { lambdas }
    }

    /// Canonical table; `k = 0` is always omitted.
    pub fn canonical(n_p: usize) -> Self {
        let lambdas = (0..1usize << n_p).map(|k| (k != 0).then(|| canonical_lambda_tilde(k, n_p))).collect();
        Self { lambdas }
    }

    /// Smallest nonzero `|λ̃|`, the largest admissible `C`.
    pub fn min_magnitude(&self) -> Option<f64> {
        self.lambdas.iter().flatten().map(|l| l.abs()).reduce(f64::min)
    }

    /// Checks `0 < C ≤ |λ̃_k|` for every kept bin.
    pub fn validate(&self, c: f64) -> Result<()> {
        let ok = c.is_finite() && c > 0.0 && self.min_magnitude().is_some_and(|m| c <= m * (1.0 + 1e-12));
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidC(c))
        }
    }

    /// Emits `R_y(2 arccos(C/λ̃_k))` on `ancilla` controlled on `phase = k`.
    pub fn emit(&self, c: f64, phase: &[usize], ancilla: usize, sink: &mut impl OpSink) -> Result<()> {
        self.validate(c)?;
        for (k, l) in self.lambdas.iter().enumerate() {
            if let Some(l) = l {
                let angle = 2.0 * (c / l).clamp(-1.0, 1.0).acos();
                sink.push(GateOp::single(GateKind::Ry(angle), ancilla).with_controls(value_controls(phase, k)));
            }
        }
        Ok(())
    }
}

/// Rotation stage on `n_p + 1` local qubits (phase register, then ancilla).
pub fn build_hhl_rotation(n_p: usize, x: f64, d: f64, c: f64) -> Result<Circuit> {
    if n_p == 0 {
        return Err(Error::InvalidPhaseBits);
    }
    let phase: Vec<usize> = (0..n_p).collect();
    let mut ops = Vec::new();
    RotationTable::walk(n_p, x, d).emit(c, &phase, n_p, &mut ops)?;
    Circuit::new(n_p + 1, ops)
}
