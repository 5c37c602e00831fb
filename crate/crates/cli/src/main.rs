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

//! `walkhhl` command-line tool.

mod bench;
mod error;
mod golden;
mod manifest;
mod mom;
mod plot;
mod solve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::manifest::RunManifest;

#[derive(Debug, Parser)]
#[command(name = "walkhhl", version, about = "Walk-operator HHL linear-system solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Walk,
    Canonical,
}

impl VariantArg {
    pub fn name(self) -> &'static str {
        match self {
            VariantArg::Walk => "walk",
            VariantArg::Canonical => "canonical",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a Matrix Market system with the simulated quantum pipeline.
    Solve(solve::SolveArgs),
    /// Count gates for preconditioner systems of growing size.
    BenchScaling(bench::BenchArgs),
    /// Generate an electrostatics system.
    Mom(mom::MomArgs),
    /// Run the hand-listed 2x2 gate sequence against the pipeline.
    GoldenAppendix(golden::GoldenArgs),
    /// Re-run the command recorded in a manifest.
    Replay {
        manifest: PathBuf,
        /// Write to this directory instead of the recorded one.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("WALKHHL_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("WALKHHL_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size thread pool: {e}")))
}

fn dispatch(command: Command, args: Vec<String>) -> Result<(), CliError> {
    let manifest = |name: &str| RunManifest::new(name, args.clone());
    match command {
        Command::Solve(a) => solve::run(&a, manifest("solve")),
        Command::BenchScaling(a) => bench::run(&a, manifest("bench-scaling")),
        Command::Mom(a) => mom::run(&a, manifest("mom")),
        Command::GoldenAppendix(a) => golden::run(&a, manifest("golden-appendix")),
        Command::Replay { manifest: path, out } => {
            let recorded = RunManifest::read(&path)?;
            let mut replay_args = recorded.replay_args(out.as_deref());
            replay_args.insert(0, "walkhhl".into());
            let cli = Cli::try_parse_from(&replay_args).map_err(|e| CliError::Usage(e.to_string()))?;
            if matches!(cli.command, Command::Replay { .. }) {
                return Err(CliError::Usage("a manifest cannot record a replay".into()));
            }
            dispatch(cli.command, replay_args[1..].to_vec())
        }
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::parse_from(&args);
    let result = configure_threads().and_then(|()| dispatch(cli.command, args[1..].to_vec()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("walkhhl: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
