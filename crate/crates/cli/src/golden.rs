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

use std::path::PathBuf;

use clap::Args;
use serde::Serialize;
use walkhhl::golden::{compare_with_pipeline, ListedSequence};

use crate::error::CliError;
use crate::manifest::{RunManifest, StagedOutputs};

/// Largest amplitude deviation accepted between the listed sequence and the pipeline.
pub const MAX_DEVIATION: f64 = 1e-9;

#[derive(Debug, Args)]
pub struct GoldenArgs {
    /// Replace the first S gate by S† first, as a sensitivity check.
    #[arg(long)]
    pub mutate: bool,
    /// Also write the report and a manifest into this directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct GoldenOutput {
    max_deviation: f64,
    relative_error: f64,
    mutated: bool,
    solution: Vec<[f64; 2]>,
}

pub fn run(args: &GoldenArgs, manifest: RunManifest) -> Result<(), CliError> {
    let seq = ListedSequence::default();
    let circuit = if args.mutate { seq.mutated() } else { seq.circuit() };
    let report = compare_with_pipeline(&circuit, &seq)?;
    println!("max amplitude deviation {:.3e}", report.max_deviation);
    println!("postselected relative error {:.3e}", report.relative_error);
    if let Some(out) = &args.out {
        let output = GoldenOutput {
            max_deviation: report.max_deviation,
            relative_error: report.relative_error,
            mutated: args.mutate,
            solution: report.solution.iter().map(|z| [z.re, z.im]).collect(),
        };
        let mut staged = StagedOutputs::default();
        staged.add_json("golden.json", &output);
        staged.commit(out, manifest)?;
    }
    if report.max_deviation <= MAX_DEVIATION {
        Ok(())
    } else {
        Err(CliError::Numerical(format!("deviation {:.3e} exceeds {MAX_DEVIATION:e}", report.max_deviation)))
    }
}
