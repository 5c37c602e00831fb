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

//! HHL with the walk operator as the phase-estimation unitary, plus the
//! canonical `e^{iAt}` pipeline used as a cross-check.

mod qpe;
mod rotation;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use qpe::{build_qpe, emit_inverse_qft, emit_qft, emit_qpe, emit_qpe_inverse, ControlledBlock};
pub use rotation::{build_hhl_rotation, canonical_lambda_tilde, lambda_tilde, RotationTable};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, hermitian_expm, ComplexMatrix, ComplexVector};
use crate::sim::{BasisTranspiler, Circuit, GateCountReport, GateCounter, GateKind, GateOp, Lowering, OpSink, RegisterLayout, StateVector};
use crate::sysprep::{prepare, recover_solution, PrepareOptions, PreparedSystem};
use crate::walk::{build_t0, WalkOperator};

/// Widest logical register the solver will simulate.
pub const MAX_SIM_QUBITS: usize = 24;

/// Postselected branches with a smaller norm are reported as failures.
pub const MIN_SUCCESS_NORM: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    Walk,
    CanonicalOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RotationConstant {
    /// Largest admissible value for the variant.
    Auto,
    Fixed(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub n_p: usize,
    pub c: RotationConstant,
    /// Shift used by [`solve_system`]; `solve` takes it from the prepared system.
    pub d_override: Option<f64>,
    pub variant: Variant,
    /// Build the basis-gate report alongside the simulation.
    pub count_gates: bool,
}

impl SolverConfig {
    pub fn new(n_p: usize) -> Self {
        Self { n_p, c: RotationConstant::Auto, d_override: None, variant: Variant::Walk, count_gates: true }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = RotationConstant::Fixed(c);
        self
    }

    pub fn with_d(mut self, d: f64) -> Self {
        self.d_override = Some(d);
        self
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn without_gate_count(mut self) -> Self {
        self.count_gates = false;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n_p == 0 {
            return Err(Error::InvalidPhaseBits);
        }
        match self.c {
            RotationConstant::Fixed(c) if !(c.is_finite() && c > 0.0) => Err(Error::InvalidC(c)),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    /// Solution of the original system, phase-aligned to the classical one.
    pub solution: ComplexVector,
    pub success_probability: f64,
    /// `|⟨x_ref|x⟩| / (‖x_ref‖‖x‖)`.
    pub fidelity_vs_oracle: f64,
    /// `‖x − x_ref‖ / ‖x_ref‖` after alignment.
    pub relative_error: f64,
    /// Unit phase that was divided out to align `solution`.
    pub phase_alignment: Complex64,
    /// Rotation constant actually used.
    pub c: f64,
    pub qubit_count: usize,
    pub gate_report: GateCountReport,
}

/// `|⟨a|b⟩| / (‖a‖‖b‖)`; zero if either vector vanishes.
pub fn overlap(a: &ComplexVector, b: &ComplexVector) -> f64 {
    let d = a.norm() * b.norm();
    if d == 0.0 {
        0.0
    } else {
        (a.dot(b).norm() / d).min(1.0)
    }
}

/// Prepares `A0 x = b0` with the configured shift and solves it.
pub fn solve_system(a0: &ComplexMatrix, b0: &ComplexVector, config: &SolverConfig) -> Result<SolveResult> {
    let prepared = prepare(a0, b0, &PrepareOptions { d: config.d_override, ..Default::default() })?;
    match config.variant {
        Variant::Walk => solve(&prepared, config),
        Variant::CanonicalOracle => solve_canonical_oracle(&prepared, config),
    }
}

/// Resolves `C` against the walk rotation table.
pub fn walk_rotation(prepared: &PreparedSystem, config: &SolverConfig) -> Result<(RotationTable, f64)> {
    config.validate()?;
    let table = RotationTable::walk(config.n_p, prepared.x, prepared.d);
    let c = match config.c {
        RotationConstant::Auto => table.min_magnitude().ok_or(Error::InvalidC(0.0))?,
        RotationConstant::Fixed(c) => c,
    };
    table.validate(c)?;
    Ok((table, c))
}

/// Streams the full walk pipeline: `T0`, QPE, rotation, QPE†, `T0†`.
pub fn emit_walk_pipeline(
    prepared: &PreparedSystem,
    layout: &RegisterLayout,
    table: &RotationTable,
    c: f64,
    sink: &mut impl OpSink,
) -> Result<()> {
    let t0 = build_t0(prepared, layout)?;
    let walk = WalkOperator::new(prepared, layout)?;
    for op in t0.ops() {
        sink.push(op.clone());
    }
    emit_qpe(&walk, &layout.phase, sink);
    table.emit(c, &layout.phase, layout.hhl_ancilla, sink)?;
    emit_qpe_inverse(&walk, &layout.phase, sink);
    for op in t0.inverse().ops() {
        sink.push(op.clone());
    }
    Ok(())
}

/// The walk pipeline as a full-width circuit.
pub fn build_walk_circuit(prepared: &PreparedSystem, config: &SolverConfig) -> Result<Circuit> {
    let layout = RegisterLayout::new(prepared.n, config.n_p)?;
    let (table, c) = walk_rotation(prepared, config)?;
    let mut ops = Vec::new();
    emit_walk_pipeline(prepared, &layout, &table, c, &mut ops)?;
    Circuit::with_layout(layout.total_qubits(), ops, layout)
}

/// Lowers multi-controls onto `work` and counts the result in
/// `{CX, RZ, SX, X}`, without storing the circuit.
pub struct BasisCountSink {
    inner: Lowering<BasisTranspiler<GateCounter>>,
}

impl BasisCountSink {
    pub fn new(work: Vec<usize>) -> Self {
        Self { inner: Lowering::new(work, BasisTranspiler::new(GateCounter::default())) }
    }

    pub fn finish(self) -> GateCountReport {
        self.inner.finish().finish().report
    }
}

impl OpSink for BasisCountSink {
    fn push(&mut self, op: GateOp) {
        self.inner.push(op);
    }
}

/// Basis-gate report of the walk pipeline. Nothing is simulated, so this
/// works at any size the dense preparation handles.
pub fn walk_gate_report(prepared: &PreparedSystem, config: &SolverConfig) -> Result<GateCountReport> {
    let layout = RegisterLayout::new(prepared.n, config.n_p)?;
    let (table, c) = walk_rotation(prepared, config)?;
    let mut sink = BasisCountSink::new(layout.work_pool());
    emit_walk_pipeline(prepared, &layout, &table, c, &mut sink)?;
    Ok(sink.finish())
}

/// Final walk-pipeline state on the logical registers (work qubits omitted,
/// multi-controls applied natively).
#[derive(Debug, Clone)]
pub struct WalkRun {
    pub state: StateVector,
    pub layout: RegisterLayout,
    pub c: f64,
    pub ops: Vec<GateOp>,
}

pub fn run_walk(prepared: &PreparedSystem, config: &SolverConfig) -> Result<WalkRun> {
    let layout = RegisterLayout::new(prepared.n, config.n_p)?;
    let width = layout.logical_qubits();
    if width > MAX_SIM_QUBITS {
        return Err(Error::TooWide(width, MAX_SIM_QUBITS));
    }
    let (table, c) = walk_rotation(prepared, config)?;
    let mut ops = Vec::new();
    emit_walk_pipeline(prepared, &layout, &table, c, &mut ops)?;
    let circuit = Circuit::new(width, ops)?;
    let mut state = StateVector::embed(width, &prepared.b)?;
    state.apply(&circuit)?;
    Ok(WalkRun { state, layout, c, ops: circuit.into_ops() })
}

/// Walk-operator HHL.
pub fn solve(prepared: &PreparedSystem, config: &SolverConfig) -> Result<SolveResult> {
    let run = run_walk(prepared, config)?;
    // Every register other than r1 is zero on the success branch, so those
    // amplitudes are the first `dim` entries.
    let amps: Vec<Complex64> = (0..prepared.dim).map(|i| run.state.amplitude(i)).collect();
    let gate_report = if config.count_gates {
        let mut sink = BasisCountSink::new(run.layout.work_pool());
        run.ops.iter().for_each(|op| sink.push(op.clone()));
        sink.finish()
    } else {
        GateCountReport::default()
    };
    finish(prepared, ComplexVector::from_vec(amps), run.c, run.c, run.layout.total_qubits(), gate_report)
}

fn finish(
    prepared: &PreparedSystem,
    amps: ComplexVector,
    c_scale: f64,
    c: f64,
    qubit_count: usize,
    gate_report: GateCountReport,
) -> Result<SolveResult> {
    let norm = amps.norm();
    if norm < MIN_SUCCESS_NORM {
        return Err(Error::ZeroSuccessProbability(norm));
    }
    let raw = recover_solution(prepared, &amps, c_scale)?;
    let original = lu_reference(prepared)?;
    let ov = original.dot(&raw);
    let phase = if ov.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { ov / ov.norm() };
    let solution = raw.scale(phase.conj());
    let relative_error = solution.sub(&original).norm() / original.norm();
    Ok(SolveResult {
        fidelity_vs_oracle: overlap(&original, &solution),
        solution,
        success_probability: norm * norm,
        relative_error,
        phase_alignment: phase,
        c,
        qubit_count,
        gate_report,
    })
}

fn lu_reference(prepared: &PreparedSystem) -> Result<ComplexVector> {
    prepared.reference_solution()
}

/// Time step `s = π / 2^{⌊log₂ λ_max⌋ + 1}` so that `|λ s| < π`. A power of
/// two keeps integer spectra exactly representable on the phase grid.
pub fn canonical_time_step(a: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eig(a)?;
    let lmax = eig.eigenvalues.iter().map(|l| l.abs()).fold(0.0, f64::max);
    if lmax == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    Ok(PI / 2f64.powi(lmax.log2().floor() as i32 + 1))
}

/// Canonical HHL with `U = e^{iAs}` applied as a dense oracle on
/// `r1 | phase | hhl`. Powers of `U` are formed exactly.
pub fn solve_canonical_oracle(prepared: &PreparedSystem, config: &SolverConfig) -> Result<SolveResult> {
    config.validate()?;
    let n = prepared.n;
    let n_p = config.n_p;
    let width = n + n_p + 1;
    if width > MAX_SIM_QUBITS {
        return Err(Error::TooWide(width, MAX_SIM_QUBITS));
    }
    let r1: Vec<usize> = (0..n).collect();
    let phase: Vec<usize> = (n..n + n_p).collect();
    let anc = n + n_p;
    let table = RotationTable::canonical(n_p);
    let c = match config.c {
        RotationConstant::Auto => 2.0 * PI / (1u64 << n_p) as f64,
        RotationConstant::Fixed(c) => c,
    };
    table.validate(c)?;
    let s = canonical_time_step(&prepared.a)?;

    let mut state = StateVector::embed(width, &prepared.b)?;
    let mut gates = Vec::new();
    let hadamards: Vec<GateOp> = phase.iter().map(|&p| GateOp::single(GateKind::H, p)).collect();
    state.apply_ops(&hadamards)?;
    gates.extend(hadamards.iter().cloned());
    for (a, &p) in phase.iter().enumerate() {
        let u = hermitian_expm(&prepared.a, s * (1u64 << a) as f64)?;
        state.apply_dense_controlled(&u, &r1, &[(p, true)])?;
    }
    let mut middle = Vec::new();
    emit_inverse_qft(&phase, &mut middle);
    table.emit(c, &phase, anc, &mut middle)?;
    emit_qft(&phase, &mut middle);
    state.apply_ops(&middle)?;
    gates.extend(middle);
    for (a, &p) in phase.iter().enumerate().rev() {
        let u = hermitian_expm(&prepared.a, -s * (1u64 << a) as f64)?;
        state.apply_dense_controlled(&u, &r1, &[(p, true)])?;
    }
    state.apply_ops(&hadamards)?;
    gates.extend(hadamards);

    let amps: Vec<Complex64> = (0..prepared.dim).map(|i| state.amplitude(i)).collect();
    // Only the gate-level stages are counted; the oracle blocks are not circuits.
    let gate_report = if config.count_gates {
        let mut sink = BasisCountSink::new(Vec::new());
        gates.into_iter().for_each(|op| sink.push(op));
        sink.finish()
    } else {
        GateCountReport::default()
    };
    finish(prepared, ComplexVector::from_vec(amps), c / s, c, width, gate_report)
}
