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

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use serde::Serialize;
use walkhhl::linalg::{gmres, GMRES_TOL};
use walkhhl::problems::{mom_rect_line, spai_pattern, RectLineGeometry};
use walkhhl::sim::GateCountReport;
use walkhhl::solver::{walk_gate_report, SolverConfig};
use walkhhl::sysprep::{prepare, PrepareOptions};

use crate::error::CliError;
use crate::manifest::{RunConfig, RunManifest, StagedOutputs};
use crate::plot::{log_log_svg, Series};

/// Rectangular-line systems have `8k` unknowns.
const ELEMENTS_PER_UNIT: usize = 8;

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// System sizes, powers of two from 8 up.
    #[arg(long, value_delimiter = ',', default_value = "8,16,32,64,128")]
    pub sizes: Vec<usize>,
    /// Preconditioner cutoff as a multiple of the element length.
    #[arg(long, default_value_t = 2.0)]
    pub delta: f64,
    /// Phase-register width.
    #[arg(long = "np", default_value_t = 2)]
    pub n_p: usize,
    /// Add unpreconditioned GMRES timings on the full system.
    #[arg(long)]
    pub classical: bool,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

struct Row {
    n: usize,
    nnz: usize,
    report: GateCountReport,
    build_seconds: f64,
    gmres: Option<(usize, f64)>,
}

/// Least-squares fit of `gates ≈ c·N_nz·log₂N` through the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingFit {
    pub c: f64,
    pub r_squared: f64,
}

pub fn fit_scaling(points: &[(f64, f64)]) -> Option<ScalingFit> {
    if points.len() < 2 {
        return None;
    }
    let c = points.iter().map(|(x, y)| x * y).sum::<f64>() / points.iter().map(|(x, _)| x * x).sum::<f64>();
    let mean = points.iter().map(|(_, y)| y).sum::<f64>() / points.len() as f64;
    let ss_res: f64 = points.iter().map(|(x, y)| (y - c * x).powi(2)).sum();
    let ss_tot: f64 = points.iter().map(|(_, y)| (y - mean).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Some(ScalingFit { c, r_squared })
}

fn measure(n: usize, args: &BenchArgs) -> Result<Row, CliError> {
    let sys = mom_rect_line(n / ELEMENTS_PER_UNIT, RectLineGeometry::default(), (1.0, -1.0))?;
    let start = Instant::now();
    let pattern = spai_pattern(&sys, args.delta * sys.element_length)?;
    let prepared = prepare(&pattern.to_dense(), &sys.v, &PrepareOptions::default())?;
    let report = walk_gate_report(&prepared, &SolverConfig::new(args.n_p))?;
    let build_seconds = start.elapsed().as_secs_f64();
    let gmres = if args.classical {
        let start = Instant::now();
        let outcome = gmres(&sys.b, &sys.v, GMRES_TOL, None)?;
        Some((outcome.iterations, start.elapsed().as_secs_f64()))
    } else {
        None
    };
    Ok(Row { n, nnz: pattern.nnz(), report, build_seconds, gmres })
}

fn to_csv(rows: &[Row], classical: bool) -> String {
    let kinds: BTreeSet<&str> = rows.iter().flat_map(|r| r.report.by_kind.keys().map(String::as_str)).collect();
    let mut csv = String::from("N,N_nz,gates_total");
    for k in &kinds {
        write!(csv, ",gates_{k}").expect("string write");
    }
    csv.push_str(",build_seconds");
    if classical {
        csv.push_str(",gmres_iterations,gmres_seconds");
    }
    csv.push('\n');
    for r in rows {
        write!(csv, "{},{},{}", r.n, r.nnz, r.report.total).expect("string write");
        for k in &kinds {
            write!(csv, ",{}", r.report.count(k)).expect("string write");
        }
        write!(csv, ",{:.6}", r.build_seconds).expect("string write");
        if let Some((iters, secs)) = r.gmres {
            write!(csv, ",{iters},{secs:.6}").expect("string write");
        }
        csv.push('\n');
    }
    csv
}

pub fn run(args: &BenchArgs, mut manifest: RunManifest) -> Result<(), CliError> {
    if args.sizes.is_empty() {
        return Err(CliError::Usage("no sizes given".into()));
    }
    if let Some(&bad) = args.sizes.iter().find(|&&n| n < ELEMENTS_PER_UNIT || !n.is_power_of_two()) {
        return Err(CliError::Usage(format!("size {bad} is not a power of two >= {ELEMENTS_PER_UNIT}")));
    }
    if !(args.delta.is_finite() && args.delta > 0.0) {
        return Err(CliError::Usage(format!("cutoff {} must be positive", args.delta)));
    }
    let mut rows = Vec::with_capacity(args.sizes.len());
    for &n in &args.sizes {
        let row = measure(n, args)?;
        println!("N={n}: N_nz={} gates={} ({:.2}s)", row.nnz, row.report.total, row.build_seconds);
        rows.push(row);
    }
    rows.sort_by_key(|r| r.n);

    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.nnz as f64 * (r.n as f64).log2(), r.report.total as f64)).collect();
    let fit = fit_scaling(&points);
    let measured = Series { label: "basis gates".into(), points: rows.iter().map(|r| (r.n as f64, r.report.total as f64)).collect() };
    let mut series = vec![measured];
    if let Some(f) = fit {
        println!("fit c={:.3}, R^2={:.6}", f.c, f.r_squared);
        series.push(Series {
            label: format!("{:.1}·N_nz·log2 N", f.c),
            points: rows.iter().zip(&points).map(|(r, (x, _))| (r.n as f64, f.c * x)).collect(),
        });
    }

    manifest.config = RunConfig { n_p: Some(args.n_p), ..Default::default() };
    let mut staged = StagedOutputs::default();
    staged.add("scaling.csv", to_csv(&rows, args.classical));
    staged.add("scaling.svg", log_log_svg("Gate count scaling", "N", "gates", &series));
    if let Some(f) = fit {
        staged.add_json("fit.json", &f);
    }
    staged.commit(&args.out, manifest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_proportional_data_fits_perfectly() {
        let pts: Vec<(f64, f64)> = (1..6).map(|k| (k as f64, 3.5 * k as f64)).collect();
        let f = fit_scaling(&pts).unwrap();
        assert!((f.c - 3.5).abs() < 1e-12);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_point_has_no_fit() {
        assert!(fit_scaling(&[(1.0, 2.0)]).is_none());
    }
}
