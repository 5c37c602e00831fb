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

use super::gate::GateOp;

/// Consumer of a gate stream. Lets large circuits be lowered and counted
/// without materializing them.
pub trait OpSink {
    fn push(&mut self, op: GateOp);
}

impl OpSink for Vec<GateOp> {
    fn push(&mut self, op: GateOp) {
        Vec::push(self, op);
    }
}

impl<S: OpSink + ?Sized> OpSink for &mut S {
    fn push(&mut self, op: GateOp) {
        (**self).push(op);
    }
}
