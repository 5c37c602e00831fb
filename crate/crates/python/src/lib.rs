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

//! Python module `walkhhl`. Matrices are lists of rows, vectors are lists;
//! entries may be any Python number and come back as `complex`.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use walkhhl::linalg::{ComplexMatrix, ComplexVector};
use walkhhl::problems::{self, MomSystem, RectLineGeometry};
use walkhhl::sim::RegisterLayout;
use walkhhl::solver::{self, SolverConfig, Variant};

create_exception!(walkhhl, WalkhhlError, PyException, "Raised when the solver or a builder rejects its input.");

fn err(e: walkhhl::Error) -> PyErr {
    WalkhhlError::new_err(e.to_string())
}

fn to_matrix(rows: Vec<Vec<Complex64>>) -> PyResult<ComplexMatrix> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != m) {
        return Err(PyValueError::new_err("matrix rows differ in length"));
    }
    Ok(ComplexMatrix::from_fn(n, m, |i, j| rows[i][j]))
}

fn from_matrix(a: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    (0..a.rows()).map(|i| (0..a.cols()).map(|j| a[(i, j)]).collect()).collect()
}

fn parse_variant(name: &str) -> PyResult<Variant> {
    match name {
        "walk" => Ok(Variant::Walk),
        "canonical" => Ok(Variant::CanonicalOracle),
        other => Err(PyValueError::new_err(format!("unknown variant {other:?}; expected 'walk' or 'canonical'"))),
    }
}

/// Solves `a x = b` with the simulated pipeline and returns a result dict.
#[pyfunction]
#[pyo3(signature = (a, b, n_p = 4, c = None, d = None, variant = "walk", count_gates = true))]
#[allow(clippy::too_many_arguments)]
fn solve<'py>(
    py: Python<'py>,
    a: Vec<Vec<Complex64>>,
    b: Vec<Complex64>,
    n_p: usize,
    c: Option<f64>,
    d: Option<f64>,
    variant: &str,
    count_gates: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let a = to_matrix(a)?;
    let b = ComplexVector::from_vec(b);
    let mut config = SolverConfig::new(n_p).with_variant(parse_variant(variant)?);
    if let Some(c) = c {
        config = config.with_c(c);
    }
    if let Some(d) = d {
        config = config.with_d(d);
    }
    if !count_gates {
        config = config.without_gate_count();
    }
    let r = py.detach(|| solver::solve_system(&a, &b, &config)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("solution", r.solution.into_vec())?;
    out.set_item("success_probability", r.success_probability)?;
    out.set_item("fidelity", r.fidelity_vs_oracle)?;
    out.set_item("relative_error", r.relative_error)?;
    out.set_item("c", r.c)?;
    out.set_item("qubits", r.qubit_count)?;
    let mut gates = r.gate_report.by_kind;
    gates.insert("total".into(), r.gate_report.total);
    out.set_item("gate_counts", gates)?;
    Ok(out)
}

/// Direct solve by partial-pivot LU.
#[pyfunction]
fn lu_solve(a: Vec<Vec<Complex64>>, b: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
    let x = walkhhl::linalg::lu_solve(&to_matrix(a)?, &ComplexVector::from_vec(b)).map_err(err)?;
    Ok(x.into_vec())
}

/// Qubits in the walk-solver register layout for `2**n` unknowns.
#[pyfunction]
fn qubit_count(n: usize, n_p: usize) -> PyResult<usize> {
    Ok(RegisterLayout::new(n, n_p).map_err(err)?.total_qubits())
}

fn system_dict<'py>(py: Python<'py>, sys: &MomSystem) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("matrix", from_matrix(&sys.b))?;
    out.set_item("rhs", sys.v.as_slice().to_vec())?;
    out.set_item("centroids", sys.centroids.clone())?;
    out.set_item("conductor", sys.conductor.clone())?;
    out.set_item("element_length", sys.element_length)?;
    Ok(out)
}

/// Two parallel strips; lengths in meters, solutions in nC/m.
#[pyfunction]
#[pyo3(signature = (elements_per_strip = 2, width = 1.0, separation = 1.0, potentials = (1.0, -1.0)))]
fn mom_two_strip<'py>(
    py: Python<'py>,
    elements_per_strip: usize,
    width: f64,
    separation: f64,
    potentials: (f64, f64),
) -> PyResult<Bound<'py, PyDict>> {
    system_dict(py, &problems::mom_two_strip(elements_per_strip, width, separation, potentials).map_err(err)?)
}

/// Two rectangular conductors side by side.
#[pyfunction]
#[pyo3(signature = (elements_per_side = 1, width = 1.0, height = 1.0, gap = 1.0, potentials = (1.0, -1.0)))]
fn mom_rect_line<'py>(
    py: Python<'py>,
    elements_per_side: usize,
    width: f64,
    height: f64,
    gap: f64,
    potentials: (f64, f64),
) -> PyResult<Bound<'py, PyDict>> {
    let geometry = RectLineGeometry { width, height, gap };
    system_dict(py, &problems::mom_rect_line(elements_per_side, geometry, potentials).map_err(err)?)
}

/// Runs the hand-listed 2x2 sequence against the pipeline.
#[pyfunction]
fn golden_report(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let r = walkhhl::golden::golden_report().map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("max_deviation", r.max_deviation)?;
    out.set_item("relative_error", r.relative_error)?;
    out.set_item("solution", r.solution.into_vec())?;
    Ok(out)
}

#[pyfunction]
fn read_matrix_market(path: &str) -> PyResult<Vec<Vec<Complex64>>> {
    Ok(from_matrix(&walkhhl::io::read_matrix_market(path).map_err(err)?))
}

#[pyfunction]
fn write_matrix_market(path: &str, a: Vec<Vec<Complex64>>) -> PyResult<()> {
    walkhhl::io::write_matrix_market(path, &to_matrix(a)?).map_err(err)
}

/// Adds the module contents to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("WalkhhlError", m.py().get_type::<WalkhhlError>())?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(lu_solve, m)?)?;
    m.add_function(wrap_pyfunction!(qubit_count, m)?)?;
    m.add_function(wrap_pyfunction!(mom_two_strip, m)?)?;
    m.add_function(wrap_pyfunction!(mom_rect_line, m)?)?;
    m.add_function(wrap_pyfunction!(golden_report, m)?)?;
    m.add_function(wrap_pyfunction!(read_matrix_market, m)?)?;
    m.add_function(wrap_pyfunction!(write_matrix_market, m)?)?;
    Ok(())
}

#[pymodule(name = "walkhhl")]
fn walkhhl_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
