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

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::circuit::Circuit;
use super::gate::{mat2_adjoint, mat2_mul, GateKind, GateOp, Mat2};
use super::sink::OpSink;

const EPS: f64 = 1e-12;

/// Gate totals in the `{CX, RZ, SX, X}` basis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateCountReport {
    pub total: usize,
    pub by_kind: BTreeMap<String, usize>,
}

impl GateCountReport {
    pub fn count(&self, kind: &str) -> usize {
        self.by_kind.get(kind).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &GateCountReport) {
        self.total += other.total;
        for (k, v) in &other.by_kind {
            *self.by_kind.entry(k.clone()).or_default() += v;
        }
    }
}

/// Name of a basis op for counting, or `None` if it is outside the basis.
pub fn basis_name(op: &GateOp) -> Option<&'static str> {
    match (op.kind, op.controls.as_slice()) {
        (GateKind::X, []) => Some("x"),
        (GateKind::X, [(_, true)]) => Some("cx"),
        (GateKind::Rz(_), []) => Some("rz"),
        (GateKind::SqrtX, []) => Some("sx"),
        _ => None,
    }
}

/// Counting sink. Panics if it sees a non-basis op.
#[derive(Debug, Default)]
pub struct GateCounter {
    pub report: GateCountReport,
}

impl OpSink for GateCounter {
    fn push(&mut self, op: GateOp) {
        let name = basis_name(&op).unwrap_or_else(|| panic!("non-basis op {op:?}"));
        self.report.total += 1;
        *self.report.by_kind.entry(name.to_string()).or_default() += 1;
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn is_diag(m: &Mat2) -> bool {
    m[0][1].norm() < EPS && m[1][0].norm() < EPS
}

fn commutes_with_x(m: &Mat2) -> bool {
    (m[0][0] - m[1][1]).norm() < EPS && (m[0][1] - m[1][0]).norm() < EPS
}

fn wrap_angle(a: f64) -> f64 {
    let mut x = a % (2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    } else if x <= -PI {
        x += 2.0 * PI;
    }
    x
}

/// `U = e^{iα} Rz(β) Ry(γ) Rz(δ)`, with `γ ∈ [0, π]`.
pub fn zyz(u: &Mat2) -> (f64, f64, f64, f64) {
    let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    let alpha = 0.5 * det.arg();
    let ph = Complex64::from_polar(1.0, -alpha);
    let a = u[0][0] * ph;
    let b = u[1][0] * ph;
    let gamma = 2.0 * b.norm().atan2(a.norm());
    let sum = if a.norm() > EPS { -2.0 * a.arg() } else { 0.0 }; // β + δ
    let diff = if b.norm() > EPS { 2.0 * b.arg() } else { 0.0 }; // β − δ
    (alpha, 0.5 * (sum + diff), gamma, 0.5 * (sum - diff))
}

fn rz_mat(t: f64) -> Mat2 {
    GateKind::Rz(t).matrix().unwrap()
}

fn ry_mat(t: f64) -> Mat2 {
    GateKind::Ry(t).matrix().unwrap()
}

/// Principal square root of a 2x2 unitary.
pub fn sqrt_unitary(u: &Mat2) -> Mat2 {
    let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    let tr = u[0][0] + u[1][1];
    let s0 = det.sqrt();
    let s = if (tr + 2.0 * s0).norm() >= (tr - 2.0 * s0).norm() { s0 } else { -s0 };
    let denom = (tr + 2.0 * s).sqrt();
    [[(u[0][0] + s) / denom, u[0][1] / denom], [u[1][0] / denom, (u[1][1] + s) / denom]]
}

/// Single-qubit synthesis into `{RZ, SX, X}` up to global phase, in circuit
/// order. At most five gates.
pub fn synth_1q(q: usize, u: &Mat2) -> Vec<GateOp> {
    let (_, beta, gamma, delta) = zyz(u);
    let mut out = Vec::with_capacity(5);
    let rz = |out: &mut Vec<GateOp>, t: f64| {
        let t = wrap_angle(t);
        if t.abs() > EPS {
            out.push(GateOp::single(GateKind::Rz(t), q));
        }
    };
    if gamma < EPS {
        rz(&mut out, beta + delta);
    } else if (gamma - PI).abs() < EPS {
        rz(&mut out, PI + delta - beta);
        out.push(GateOp::single(GateKind::X, q));
    } else if (gamma - FRAC_PI_2).abs() < EPS {
        rz(&mut out, delta - FRAC_PI_2);
        out.push(GateOp::single(GateKind::SqrtX, q));
        rz(&mut out, beta + FRAC_PI_2);
    } else {
        rz(&mut out, delta);
        out.push(GateOp::single(GateKind::SqrtX, q));
        rz(&mut out, gamma - PI);
        out.push(GateOp::single(GateKind::SqrtX, q));
        rz(&mut out, beta + PI);
    }
    out
}

/// Streaming decomposition into `{CX, RZ, SX, X}`. Consecutive single-qubit
/// gates on a wire are fused; a fused gate is carried through a CX while it
/// commutes with that CX (diagonal on the control, X-like on the target).
/// Global phases are dropped.
pub struct BasisTranspiler<S: OpSink> {
    pending: Vec<Option<Mat2>>,
    inner: S,
}

impl<S: OpSink> BasisTranspiler<S> {
    pub fn new(inner: S) -> Self {
        Self { pending: Vec::new(), inner }
    }

    pub fn finish(mut self) -> S {
        for q in 0..self.pending.len() {
            self.flush(q);
        }
        self.inner
    }

    fn slot(&mut self, q: usize) -> &mut Option<Mat2> {
        if q >= self.pending.len() {
            self.pending.resize(q + 1, None);
        }
        &mut self.pending[q]
    }

    fn u(&mut self, q: usize, m: &Mat2) {
        let slot = self.slot(q);
        *slot = Some(match slot {
            Some(p) => mat2_mul(m, p),
            None => *m,
        });
    }

    fn flush(&mut self, q: usize) {
        if let Some(m) = self.slot(q).take() {
            for op in synth_1q(q, &m) {
                self.inner.push(op);
            }
        }
    }

    fn cx(&mut self, ctl: usize, tgt: usize) {
        if let Some(m) = *self.slot(ctl) {
            if !is_diag(&m) {
                // Keep the trailing RZ pending, it commutes with the control.
                let mut ops = synth_1q(ctl, &m);
                let keep = match ops.last() {
                    Some(GateOp { kind: GateKind::Rz(t), .. }) => Some(rz_mat(*t)),
                    _ => None,
                };
                if keep.is_some() {
                    ops.pop();
                }
                for op in ops {
                    self.inner.push(op);
                }
                *self.slot(ctl) = keep;
            }
        }
        if let Some(m) = *self.slot(tgt) {
            if !commutes_with_x(&m) {
                self.flush(tgt);
            }
        }
        self.inner.push(GateOp::cx(ctl, tgt));
    }

    fn controlled_u(&mut self, ctl: usize, tgt: usize, u: &Mat2) {
        let z = c(0.0, 0.0);
        // e^{iα} X: a CX plus a phase on the control.
        if u[0][0].norm() < EPS && u[1][1].norm() < EPS && (u[0][1] - u[1][0]).norm() < EPS {
            self.cx(ctl, tgt);
            let a = u[0][1].arg();
            if a.abs() > EPS {
                self.u(ctl, &[[c(1.0, 0.0), z], [z, Complex64::from_polar(1.0, a)]]);
            }
            return;
        }
        let (alpha, beta, gamma, delta) = zyz(u);
        let cm = rz_mat(0.5 * (delta - beta));
        let bm = mat2_mul(&ry_mat(-0.5 * gamma), &rz_mat(-0.5 * (delta + beta)));
        let am = mat2_mul(&rz_mat(beta), &ry_mat(0.5 * gamma));
        self.u(tgt, &cm);
        self.cx(ctl, tgt);
        self.u(tgt, &bm);
        self.cx(ctl, tgt);
        self.u(tgt, &am);
        if alpha.abs() > EPS {
            self.u(ctl, &[[c(1.0, 0.0), z], [z, Complex64::from_polar(1.0, alpha)]]);
        }
    }

    /// Six-CX Toffoli built as `H · CCZ · H`, with the target as the wire that
    /// only ever acts as a CX control so its phase merges between the two H.
    fn toffoli(&mut self, a: usize, b: usize, t: usize) {
        let h = GateKind::H.matrix().unwrap();
        let tg = GateKind::T.matrix().unwrap();
        let td = GateKind::Tdg.matrix().unwrap();
        self.u(t, &h);
        self.u(t, &tg);
        self.u(a, &tg);
        self.u(b, &tg);
        self.cx(a, b);
        self.u(b, &td);
        self.cx(t, b);
        self.u(b, &tg);
        self.cx(a, b);
        self.u(b, &td);
        self.cx(t, a);
        self.u(a, &td);
        self.cx(t, b);
        self.cx(t, a);
        self.u(t, &h);
    }

    /// `U` on `t` controlled on all of `ctl` (all at value 1).
    fn mc_u(&mut self, ctl: &[usize], t: usize, u: &Mat2) {
        match ctl.len() {
            0 => self.u(t, u),
            1 => self.controlled_u(ctl[0], t, u),
            _ => {
                let x = GateKind::X.matrix().unwrap();
                if ctl.len() == 2 && (0..2).all(|i| (0..2).all(|j| (u[i][j] - x[i][j]).norm() < EPS)) {
                    self.toffoli(ctl[0], ctl[1], t);
                    return;
                }
                // C^k U = CV(c_k) · C^{k-1}X(→c_k) · CV†(c_k) · C^{k-1}X(→c_k) · C^{k-1}V
                let v = sqrt_unitary(u);
                let vd = mat2_adjoint(&v);
                let (last, rest) = ctl.split_last().unwrap();
                self.controlled_u(*last, t, &v);
                self.mc_u(rest, *last, &x);
                self.controlled_u(*last, t, &vd);
                self.mc_u(rest, *last, &x);
                self.mc_u(rest, t, &v);
            }
        }
    }

    fn decompose(&mut self, op: &GateOp) {
        let x = GateKind::X.matrix().unwrap();
        let zeros: Vec<usize> = op.controls.iter().filter(|c| !c.1).map(|c| c.0).collect();
        for &q in &zeros {
            self.u(q, &x);
        }
        let ctl: Vec<usize> = op.controls.iter().map(|c| c.0).collect();
        match op.kind {
            GateKind::GlobalPhase(w) => {
                if let Some((last, rest)) = ctl.split_last() {
                    let p = GateKind::Phase(w).matrix().unwrap();
                    self.mc_u(rest, *last, &p);
                }
            }
            GateKind::Swap => {
                let (a, b) = (op.targets[0], op.targets[1]);
                self.cx(b, a);
                let mut inner = ctl.clone();
                inner.push(a);
                self.mc_u(&inner, b, &x);
                self.cx(b, a);
            }
            kind => {
                let m = kind.matrix().unwrap();
                self.mc_u(&ctl, op.targets[0], &m);
            }
        }
        for &q in &zeros {
            self.u(q, &x);
        }
    }
}

impl<S: OpSink> OpSink for BasisTranspiler<S> {
    fn push(&mut self, op: GateOp) {
        self.decompose(&op);
    }
}

/// Rewrites `circuit` in the `{CX, RZ, SX, X}` basis. Equivalent up to a
/// global phase.
pub fn decompose_to_basis(circuit: &Circuit) -> (Circuit, GateCountReport) {
    let mut t = BasisTranspiler::new(Vec::new());
    for op in circuit.ops() {
        t.push(op.clone());
    }
    let ops = t.finish();
    let mut counter = GateCounter::default();
    for op in &ops {
        counter.push(op.clone());
    }
    let out = Circuit::new(circuit.num_qubits(), ops).expect("transpiler keeps indices in range");
    (out, counter.report)
}

/// Counts basis gates for an op stream without storing it.
pub fn count_basis<'a>(ops: impl IntoIterator<Item = &'a GateOp>) -> GateCountReport {
    let mut t = BasisTranspiler::new(GateCounter::default());
    for op in ops {
        t.push(op.clone());
    }
    t.finish().report
}
