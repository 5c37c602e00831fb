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

use std::fmt;

/// Failures mapped onto the documented exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable input, unwritable output or malformed files: exit 1.
    Io(String),
    /// Bad flag values: exit 1.
    Usage(String),
    /// Numerical or solver failure: exit 2.
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "I/O error: {m}"),
            CliError::Usage(m) => write!(f, "invalid arguments: {m}"),
            CliError::Numerical(m) => write!(f, "{m}"),
        }
    }
}

impl From<walkhhl::Error> for CliError {
    fn from(e: walkhhl::Error) -> Self {
        match e {
            walkhhl::Error::Io(m) => CliError::Io(m),
            walkhhl::Error::Parse { .. } => CliError::Io(e.to_string()),
            other => CliError::Numerical(other.to_string()),
        }
    }
}
