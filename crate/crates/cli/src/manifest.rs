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

//! Run manifests and staged output writing.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const MANIFEST_FILE: &str = "manifest.json";

/// Solver settings as given on the command line.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n_p: Option<usize>,
    pub c: Option<f64>,
    pub d: Option<f64>,
    pub variant: Option<String>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    /// Arguments after the program name, enough to replay the run.
    pub args: Vec<String>,
    pub inputs: Vec<PathBuf>,
    pub config: RunConfig,
    pub tool_version: String,
    pub timestamp_unix: u64,
    pub threads: usize,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: &str, args: Vec<String>) -> Self {
        let timestamp_unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Self {
            command: command.into(),
            args,
            inputs: Vec::new(),
            config: RunConfig::default(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            timestamp_unix,
            threads: rayon::current_num_threads(),
            outputs: Vec::new(),
        }
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }

    /// Recorded arguments, with `--out` replaced when `out` is given.
    pub fn replay_args(&self, out: Option<&Path>) -> Vec<String> {
        let Some(out) = out else {
            return self.args.clone();
        };
        let mut args = Vec::with_capacity(self.args.len() + 2);
        let mut iter = self.args.iter();
        while let Some(a) = iter.next() {
            if a == "--out" {
                iter.next();
            } else if !a.starts_with("--out=") {
                args.push(a.clone());
            }
        }
        args.push("--out".into());
        args.push(out.display().to_string());
        args
    }
}

/// Output files held in memory until the command has succeeded, so a failed
/// run leaves nothing behind.
#[derive(Debug, Default)]
pub struct StagedOutputs {
    files: Vec<(String, Vec<u8>)>,
}

impl StagedOutputs {
    pub fn add(&mut self, name: impl Into<String>, contents: impl Into<Vec<u8>>) {
        self.files.push((name.into(), contents.into()));
    }

    pub fn add_json<T: Serialize>(&mut self, name: impl Into<String>, value: &T) {
        let mut text = serde_json::to_string_pretty(value).expect("serializable output");
        text.push('\n');
        self.add(name, text);
    }

    /// Writes every staged file and the manifest into `dir`.
    pub fn commit(self, dir: &Path, mut manifest: RunManifest) -> Result<(), CliError> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        manifest.outputs = self.files.iter().map(|(n, _)| n.clone()).collect();
        let mut text = serde_json::to_string_pretty(&manifest).expect("serializable manifest");
        text.push('\n');
        for (name, contents) in self.files.iter().map(|(n, c)| (n.as_str(), c.as_slice())).chain([(MANIFEST_FILE, text.as_bytes())]) {
            let path = dir.join(name);
            std::fs::write(&path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}
