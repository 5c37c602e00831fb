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

//! Line-oriented circuit text: `NAME[(param)] c=[q:v,...] t=[q,...]`.

use std::fmt::Write;

use super::circuit::Circuit;
use super::gate::{GateKind, GateOp};
use crate::error::{Error, Result};

pub fn format_op(op: &GateOp) -> String {
    let mut s = String::from(op.kind.name());
    if let Some(p) = op.kind.param() {
        write!(s, "({p:?})").unwrap();
    }
    let ctl: Vec<String> = op.controls.iter().map(|&(q, v)| format!("{q}:{}", v as u8)).collect();
    let tgt: Vec<String> = op.targets.iter().map(|q| q.to_string()).collect();
    write!(s, " c=[{}] t=[{}]", ctl.join(","), tgt.join(",")).unwrap();
    s
}

/// One op per line, preceded by a `qubits <width>` header.
pub fn dump(circuit: &Circuit) -> String {
    let mut s = format!("qubits {}\n", circuit.num_qubits());
    for op in circuit.ops() {
        s.push_str(&format_op(op));
        s.push('\n');
    }
    s
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_list(line: usize, field: &str, prefix: &str) -> Result<Vec<String>> {
    let body = field
        .strip_prefix(prefix)
        .and_then(|f| f.strip_prefix('['))
        .and_then(|f| f.strip_suffix(']'))
        .ok_or_else(|| perr(line, format!("expected {prefix}[...]")))?;
    Ok(body.split(',').filter(|t| !t.is_empty()).map(str::to_string).collect())
}

pub fn parse_op(line_no: usize, line: &str) -> Result<GateOp> {
    let mut parts = line.split_whitespace();
    let head = parts.next().ok_or_else(|| perr(line_no, "empty line"))?;
    let (name, param) = match head.split_once('(') {
        Some((n, rest)) => {
            let p = rest.strip_suffix(')').ok_or_else(|| perr(line_no, "unclosed parameter"))?;
            (n, Some(p.parse::<f64>().map_err(|e| perr(line_no, e.to_string()))?))
        }
        None => (head, None),
    };
    let need = |p: Option<f64>| p.ok_or_else(|| perr(line_no, format!("{name} needs a parameter")));
    let kind = match name {
        "H" => GateKind::H,
        "X" => GateKind::X,
        "Y" => GateKind::Y,
        "Z" => GateKind::Z,
        "S" => GateKind::S,
        "Sdg" => GateKind::Sdg,
        "T" => GateKind::T,
        "Tdg" => GateKind::Tdg,
        "SX" => GateKind::SqrtX,
        "SXdg" => GateKind::SqrtXdg,
        "SWAP" => GateKind::Swap,
        "RY" => GateKind::Ry(need(param)?),
        "RZ" => GateKind::Rz(need(param)?),
        "P" => GateKind::Phase(need(param)?),
        "GPHASE" => GateKind::GlobalPhase(need(param)?),
        other => return Err(perr(line_no, format!("unknown gate {other}"))),
    };
    let ctl_field = parts.next().ok_or_else(|| perr(line_no, "missing controls"))?;
    let tgt_field = parts.next().ok_or_else(|| perr(line_no, "missing targets"))?;
    let controls = parse_list(line_no, ctl_field, "c=")?
        .iter()
        .map(|t| {
            let (q, v) = t.split_once(':').ok_or_else(|| perr(line_no, "control needs q:v"))?;
            let q = q.parse::<usize>().map_err(|e| perr(line_no, e.to_string()))?;
            match v {
                "0" => Ok((q, false)),
                "1" => Ok((q, true)),
                _ => Err(perr(line_no, "control value must be 0 or 1")),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let targets = parse_list(line_no, tgt_field, "t=")?
        .iter()
        .map(|t| t.parse::<usize>().map_err(|e| perr(line_no, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok(GateOp { kind, targets, controls })
}

pub fn parse(text: &str) -> Result<Circuit> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or_else(|| perr(1, "missing header"))?;
    let width = header
        .strip_prefix("qubits ")
        .and_then(|w| w.trim().parse::<usize>().ok())
        .ok_or_else(|| perr(1, "expected `qubits <width>`"))?;
    let ops = lines.map(|(i, l)| parse_op(i + 1, l)).collect::<Result<Vec<_>>>()?;
    Circuit::new(width, ops)
}
