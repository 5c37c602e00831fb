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

//! Matrix Market matrices and plain-text complex vectors.
//!
//! Vectors are one entry per line as `re im` (or just `re`); blank lines and
//! lines starting with `#` or `%` are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Real,
    Complex,
    Integer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
    SkewSymmetric,
    Hermitian,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<f64> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse::<f64>().map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

fn index(tok: Option<&str>, line: usize, bound: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing index"))?;
    let i: usize = tok.parse().map_err(|_| parse_err(line, format!("bad index '{tok}'")))?;
    if i == 0 || i > bound {
        return Err(parse_err(line, format!("index {i} outside 1..={bound}")));
    }
    Ok(i - 1)
}

/// Parses a Matrix Market `coordinate` or `array` matrix.
pub fn parse_matrix_market(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let h: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if h.len() != 5 || h[0] != "%%matrixmarket" || h[1] != "matrix" {
        return Err(parse_err(hline, "expected '%%MatrixMarket matrix <format> <field> <symmetry>'"));
    }
    let coordinate = match h[2].as_str() {
        "coordinate" => true,
        "array" => false,
        f => return Err(parse_err(hline, format!("unsupported format '{f}'"))),
    };
    let field = match h[3].as_str() {
        "real" | "double" => Field::Real,
        "complex" => Field::Complex,
        "integer" => Field::Integer,
        f => return Err(parse_err(hline, format!("unsupported field '{f}'"))),
    };
    let symmetry = match h[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        "skew-symmetric" => Symmetry::SkewSymmetric,
        "hermitian" => Symmetry::Hermitian,
        s => return Err(parse_err(hline, format!("unsupported symmetry '{s}'"))),
    };
    let mut data = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));
    let (sline, size) = data.next().ok_or_else(|| parse_err(hline + 1, "missing size line"))?;
    let mut st = size.split_whitespace();
    let rows = num(st.next(), sline, "row count")? as usize;
    let cols = num(st.next(), sline, "column count")? as usize;
    if symmetry != Symmetry::General && rows != cols {
        return Err(parse_err(sline, "symmetric storage needs a square matrix"));
    }
    let mut m = ComplexMatrix::zeros(rows, cols);
    let read_value = |toks: &mut std::str::SplitWhitespace, line: usize| -> Result<Complex64> {
        let re = num(toks.next(), line, "value")?;
        let im = if field == Field::Complex { num(toks.next(), line, "imaginary part")? } else { 0.0 };
        Ok(Complex64::new(re, im))
    };
    let place = |m: &mut ComplexMatrix, i: usize, j: usize, v: Complex64| {
        m[(i, j)] = v;
        if i != j {
            match symmetry {
                Symmetry::General => {}
                Symmetry::Symmetric => m[(j, i)] = v,
                Symmetry::SkewSymmetric => m[(j, i)] = -v,
                Symmetry::Hermitian => m[(j, i)] = v.conj(),
            }
        }
    };
    let mut seen = 0usize;
    if coordinate {
        let nnz = num(st.next(), sline, "entry count")? as usize;
        for (line, l) in data {
            let mut toks = l.split_whitespace();
            let i = index(toks.next(), line, rows)?;
            let j = index(toks.next(), line, cols)?;
            let v = read_value(&mut toks, line)?;
            if symmetry != Symmetry::General && j > i {
                return Err(parse_err(line, "symmetric storage lists the lower triangle only"));
            }
            place(&mut m, i, j, v);
            seen += 1;
        }
        if seen != nnz {
            return Err(parse_err(sline, format!("header promises {nnz} entries, found {seen}")));
        }
    } else {
        // Column-major; symmetric storage holds the lower triangle.
        let mut slots = Vec::new();
        for j in 0..cols {
            let start = if symmetry == Symmetry::General { 0 } else { j };
            for i in start..rows {
                if symmetry == Symmetry::SkewSymmetric && i == j {
                    continue;
                }
                slots.push((i, j));
            }
        }
        for (line, l) in data {
            let &(i, j) = slots.get(seen).ok_or_else(|| parse_err(line, "too many values"))?;
            let mut toks = l.split_whitespace();
            let v = read_value(&mut toks, line)?;
            place(&mut m, i, j, v);
            seen += 1;
        }
        if seen != slots.len() {
            return Err(parse_err(sline, format!("expected {} values, found {seen}", slots.len())));
        }
    }
    m.check_finite()?;
    Ok(m)
}

/// Coordinate format, `real` when every entry is real, else `complex`.
/// Values use the shortest representation that parses back exactly.
pub fn format_matrix_market(m: &ComplexMatrix) -> String {
    let complex = m.as_slice().iter().any(|z| z.im != 0.0);
    let mut out = String::new();
    let field = if complex { "complex" } else { "real" };
    writeln!(out, "%%MatrixMarket matrix coordinate {field} general").unwrap();
    writeln!(out, "{} {} {}", m.rows(), m.cols(), m.nnz(0.0)).unwrap();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let z = m[(i, j)];
            if z == Complex64::new(0.0, 0.0) {
                continue;
            }
            if complex {
                writeln!(out, "{} {} {:?} {:?}", i + 1, j + 1, z.re, z.im).unwrap();
            } else {
                writeln!(out, "{} {} {:?}", i + 1, j + 1, z.re).unwrap();
            }
        }
    }
    out
}

pub fn parse_vector(text: &str) -> Result<ComplexVector> {
    let mut v = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') || l.starts_with('%') {
            continue;
        }
        let mut toks = l.split_whitespace();
        let re = num(toks.next(), i + 1, "real part")?;
        let im = match toks.next() {
            Some(t) => num(Some(t), i + 1, "imaginary part")?,
            None => 0.0,
        };
        if toks.next().is_some() {
            return Err(parse_err(i + 1, "expected at most two numbers"));
        }
        v.push(Complex64::new(re, im));
    }
    let v = ComplexVector::from_vec(v);
    if !v.is_finite() {
        return Err(parse_err(0, "non-finite vector entry"));
    }
    Ok(v)
}

pub fn format_vector(v: &ComplexVector) -> String {
    v.iter().map(|z| format!("{:?} {:?}\n", z.re, z.im)).collect()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_matrix_market(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    parse_matrix_market(&read(path.as_ref())?)
}

pub fn write_matrix_market(path: impl AsRef<Path>, m: &ComplexMatrix) -> Result<()> {
    write(path.as_ref(), &format_matrix_market(m))
}

pub fn read_vector(path: impl AsRef<Path>) -> Result<ComplexVector> {
    parse_vector(&read(path.as_ref())?)
}

pub fn write_vector(path: impl AsRef<Path>, v: &ComplexVector) -> Result<()> {
    write(path.as_ref(), &format_vector(v))
}
