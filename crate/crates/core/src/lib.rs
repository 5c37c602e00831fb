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

//! Gate-level simulation of a walk-operator HHL linear-system solver.
//!
//! The crate is layered bottom-up: [`linalg`] for dense references, [`sim`] for
//! circuits and statevectors, [`sysprep`] for restricting a system to the form
//! the algorithm accepts, [`walk`] for the walk operator, [`solver`] for the
//! full pipeline and [`problems`] for the electrostatics test systems.

pub mod error;
pub mod golden;
pub mod io;
pub mod linalg;
pub mod problems;
pub mod random;
pub mod sim;
pub mod solver;
pub mod sysprep;
pub mod walk;

pub use error::{Error, Result};
