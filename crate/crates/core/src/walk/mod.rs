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

//! The walk operator `W = iS(2TT† − I)`: state-preparation blocks, `T0`,
//! reflectors, and explicit matrices for checking them.

mod angles;
mod build;
mod dense;

pub use angles::{sqrt_entry, WalkAngles, ANGLE_EPS};
pub use build::{build_bj, build_bprime, build_reflector, build_t0, build_w, WalkOperator};
pub use dense::{dense_s, dense_t, dense_w, MAX_DENSE_N};
