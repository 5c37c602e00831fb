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
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;
use walkhhl::io::{read_matrix_market, read_vector};
use walkhhl::solver::{solve_system, SolverConfig, Variant};

use crate::error::CliError;
use crate::manifest::{RunConfig, RunManifest, StagedOutputs};
use crate::VariantArg;

pub const RESULT_FILE: &str = "result.json";

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Matrix Market file holding `A0`.
    pub matrix: PathBuf,
    /// Right-hand side, one "re im" pair per line.
    pub rhs: PathBuf,
    /// Phase-register width.
    #[arg(long = "np", default_value_t = 4)]
    pub n_p: usize,
    /// Rotation constant; the largest admissible value when omitted.
    #[arg(long)]
    pub c: Option<f64>,
    /// Diagonal shift; the smallest one clearing negative diagonals when omitted.
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Walk)]
    pub variant: VariantArg,
    /// Recorded in the manifest; the pipeline itself is deterministic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the basis-gate count.
    #[arg(long)]
    pub no_gates: bool,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Serialize)]
struct SolveOutput {
    solution: Vec<[f64; 2]>,
    success_probability: f64,
    fidelity: f64,
    relative_error: f64,
    c: f64,
    qubits: usize,
    gate_counts: BTreeMap<String, usize>,
}

pub fn run(args: &SolveArgs, mut manifest: RunManifest) -> Result<(), CliError> {
    let a0 = read_matrix_market(&args.matrix)?;
    let b0 = read_vector(&args.rhs)?;
    let variant = match args.variant {
        VariantArg::Walk => Variant::Walk,
        VariantArg::Canonical => Variant::CanonicalOracle,
    };
    let mut config = SolverConfig::new(args.n_p).with_variant(variant);
    if let Some(c) = args.c {
        config = config.with_c(c);
    }
    if let Some(d) = args.d {
        config = config.with_d(d);
    }
    if args.no_gates {
        config = config.without_gate_count();
    }
    let result = solve_system(&a0, &b0, &config)?;

    let mut gate_counts = result.gate_report.by_kind.clone();
    gate_counts.insert("total".into(), result.gate_report.total);
    let output = SolveOutput {
        solution: result.solution.iter().map(|z| [z.re, z.im]).collect(),
        success_probability: result.success_probability,
        fidelity: result.fidelity_vs_oracle,
        relative_error: result.relative_error,
        c: result.c,
        qubits: result.qubit_count,
        gate_counts,
    };
    println!(
        "fidelity {:.12}, success probability {:.6e}, {} qubits, {} basis gates",
        output.fidelity, output.success_probability, output.qubits, result.gate_report.total
    );

    manifest.inputs = vec![args.matrix.clone(), args.rhs.clone()];
    manifest.config = RunConfig {
        n_p: Some(args.n_p),
        c: args.c,
        d: args.d,
        variant: Some(args.variant.name().into()),
        seed: Some(args.seed),
    };
    let mut staged = StagedOutputs::default();
    staged.add_json(RESULT_FILE, &output);
    staged.commit(&args.out, manifest)
}

