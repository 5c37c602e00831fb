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

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Subcommand};
use serde::Serialize;
use walkhhl::io::{format_matrix_market, format_vector};
use walkhhl::linalg::lu_solve;
use walkhhl::problems::{mom_rect_line, mom_two_strip, MomSystem, RectLineGeometry};

use crate::error::CliError;
use crate::manifest::{RunManifest, StagedOutputs};

#[derive(Debug, Args)]
pub struct MomArgs {
    #[command(subcommand)]
    pub geometry: Geometry,
}

#[derive(Debug, Subcommand)]
pub enum Geometry {
    /// Two parallel flat strips.
    TwoStrip {
        /// Elements per strip.
        #[arg(long, default_value_t = 2)]
        elems: usize,
        /// Strip width in meters.
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        /// Strip separation in meters.
        #[arg(long, default_value_t = 1.0)]
        separation: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Two rectangular conductors side by side.
    Rect {
        /// Elements on the shorter side of each rectangle.
        #[arg(long, default_value_t = 1)]
        elems_per_side: usize,
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        #[arg(long, default_value_t = 1.0)]
        height: f64,
        /// Distance between the facing sides.
        #[arg(long, default_value_t = 1.0)]
        gap: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Potential of the first conductor in volts.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub v1: f64,
    /// Potential of the second conductor in volts.
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub v2: f64,
    /// Also solve the system directly and write per-element charges.
    #[arg(long)]
    pub solve_classical: bool,
    /// Stem of the output file names.
    #[arg(long, default_value = "system")]
    pub name: String,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Serialize)]
struct GeometryRecord<'a> {
    kind: &'static str,
    parameters: serde_json::Value,
    potentials: [f64; 2],
    unknowns: usize,
    element_length: f64,
    centroids: &'a [(f64, f64)],
    conductor: &'a [usize],
}

/// CSV of element centroids with the directly solved densities and charges.
fn charges_csv(sys: &MomSystem) -> Result<String, CliError> {
    let q = lu_solve(&sys.b, &sys.v)?;
    let mut csv = String::from("element,x,y,conductor,density_nC_per_m,charge_nC\n");
    for (i, (&(x, y), z)) in sys.centroids.iter().zip(q.iter()).enumerate() {
        writeln!(csv, "{i},{x},{y},{},{},{}", sys.conductor[i], z.re, z.re * sys.element_length).expect("string write");
    }
    Ok(csv)
}

pub fn run(args: &MomArgs, manifest: RunManifest) -> Result<(), CliError> {
    let (kind, sys, parameters, common) = match &args.geometry {
        Geometry::TwoStrip { elems, width, separation, common } => (
            "two-strip",
            mom_two_strip(*elems, *width, *separation, (common.v1, common.v2))?,
            serde_json::json!({ "elements_per_strip": elems, "width": width, "separation": separation }),
            common,
        ),
        Geometry::Rect { elems_per_side, width, height, gap, common } => {
            let geometry = RectLineGeometry { width: *width, height: *height, gap: *gap };
            (
                "rect",
                mom_rect_line(*elems_per_side, geometry, (common.v1, common.v2))?,
                serde_json::json!({ "elements_per_side": elems_per_side, "width": width, "height": height, "gap": gap }),
                common,
            )
        }
    };
    let record = GeometryRecord {
        kind,
        parameters,
        potentials: [common.v1, common.v2],
        unknowns: sys.len(),
        element_length: sys.element_length,
        centroids: &sys.centroids,
        conductor: &sys.conductor,
    };
    let stem = &common.name;
    let mut staged = StagedOutputs::default();
    staged.add(format!("{stem}.mtx"), format_matrix_market(&sys.b));
    staged.add(format!("{stem}.rhs"), format_vector(&sys.v));
    staged.add_json(format!("{stem}.geometry.json"), &record);
    if common.solve_classical {
        staged.add(format!("{stem}.charges.csv"), charges_csv(&sys)?);
    }
    println!("{kind}: {} unknowns, element length {}", sys.len(), sys.element_length);
    staged.commit(&common.out, manifest)
}
