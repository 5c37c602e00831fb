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

//! Method-of-moments electrostatics systems and distance-cutoff sparse
//! preconditioners built from them.
//!
//! Lengths are in meters. `B` is scaled so that solving `B q = V` yields the
//! charge density of each element in nC/m.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector};

/// Vacuum permittivity in F/m.
pub const EPSILON_0: f64 = 8.8541878128e-12;

/// Converts the SI kernel to nanocoulomb units.
const PER_NANOCOULOMB: f64 = 1e-9;

/// `B q = V` for a set of uniform boundary elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomSystem {
    pub b: ComplexMatrix,
    pub v: ComplexVector,
    pub centroids: Vec<(f64, f64)>,
    /// Conductor index per element.
    pub conductor: Vec<usize>,
    pub element_length: f64,
}

impl MomSystem {
    pub fn len(&self) -> usize {
        self.centroids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centroids.is_empty()
    }

    pub fn distance(&self, j: usize, k: usize) -> f64 {
        let (a, b) = (self.centroids[j], self.centroids[k]);
        (a.0 - b.0).hypot(a.1 - b.1)
    }

    /// Total charge on conductor `c` given element densities `q`.
    pub fn conductor_charge(&self, q: &ComplexVector, c: usize) -> f64 {
        let sum: f64 = self.conductor.iter().zip(q.iter()).filter(|(&k, _)| k == c).map(|(_, x)| x.re).sum();
        sum * self.element_length
    }
}

/// Self term for element length `l`.
fn self_term(l: f64) -> f64 {
    -(l / (2.0 * std::f64::consts::PI * EPSILON_0)) * (l.ln() - 1.5) * PER_NANOCOULOMB
}

fn mutual_term(l: f64, d: f64) -> f64 {
    -(l / (2.0 * std::f64::consts::PI * EPSILON_0)) * d.ln() * PER_NANOCOULOMB
}

fn assemble(centroids: Vec<(f64, f64)>, conductor: Vec<usize>, l: f64, potentials: &[f64]) -> Result<MomSystem> {
    let n = centroids.len();
    let mut b = ComplexMatrix::zeros(n, n);
    let dist = |j: usize, k: usize| (centroids[j].0 - centroids[k].0).hypot(centroids[j].1 - centroids[k].1);
    for j in 0..n {
        b[(j, j)] = self_term(l).into();
        for k in 0..j {
            let d = dist(j, k);
            if d == 0.0 {
                return Err(Error::InvalidGeometry(format!("elements {k} and {j} coincide")));
            }
            let v = mutual_term(l, d);
            b[(j, k)] = v.into();
            b[(k, j)] = v.into();
        }
    }
    let v = ComplexVector::from_real(&conductor.iter().map(|&c| potentials[c]).collect::<Vec<_>>());
    Ok(MomSystem { b, v, centroids, conductor, element_length: l })
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidGeometry(format!("{name} must be positive, got {x}")))
    }
}

/// Two parallel strips of width `width` at `x = 0` and `x = separation`,
/// each split into `elements_per_strip` elements along `y`.
pub fn mom_two_strip(elements_per_strip: usize, width: f64, separation: f64, potentials: (f64, f64)) -> Result<MomSystem> {
    if elements_per_strip == 0 {
        return Err(Error::InvalidGeometry("need at least one element per strip".into()));
    }
    positive("width", width)?;
    positive("separation", separation)?;
    let l = width / elements_per_strip as f64;
    let mut centroids = Vec::with_capacity(2 * elements_per_strip);
    let mut conductor = Vec::with_capacity(2 * elements_per_strip);
    for (c, x) in [0.0, separation].into_iter().enumerate() {
        for i in 0..elements_per_strip {
            centroids.push((x, (i as f64 + 0.5) * l));
            conductor.push(c);
        }
    }
    assemble(centroids, conductor, l, &[potentials.0, potentials.1])
}

/// Cross-section of two rectangular conductors side by side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectLineGeometry {
    pub width: f64,
    pub height: f64,
    /// Distance between the facing sides.
    pub gap: f64,
}

impl Default for RectLineGeometry {
    /// Unit squares one unit apart; the pair spans a 3:1 box and element
    /// counts `8k` stay powers of two for `k = 2^m`.
    fn default() -> Self {
        Self { width: 1.0, height: 1.0, gap: 1.0 }
    }
}

/// Rectangular two-conductor line. The shorter side gets `elements_per_side`
/// elements and the longer side as many as keep the element length uniform,
/// which must come out to an integer.
pub fn mom_rect_line(elements_per_side: usize, geometry: RectLineGeometry, potentials: (f64, f64)) -> Result<MomSystem> {
    if elements_per_side == 0 {
        return Err(Error::InvalidGeometry("need at least one element per side".into()));
    }
    let RectLineGeometry { width, height, gap } = geometry;
    positive("width", width)?;
    positive("height", height)?;
    positive("gap", gap)?;
    let l = width.min(height) / elements_per_side as f64;
    let count = |side: f64| -> Result<usize> {
        let k = (side / l).round();
        if (side / l - k).abs() > 1e-9 {
            return Err(Error::InvalidGeometry(format!("side {side} is not a multiple of element length {l}")));
        }
        Ok(k as usize)
    };
    let (nw, nh) = (count(width)?, count(height)?);
    let mut centroids = Vec::new();
    let mut conductor = Vec::new();
    for (c, x0) in [0.0, width + gap].into_iter().enumerate() {
        // Counter-clockwise from the bottom-left corner.
        let sides = [((x0, 0.0), (1.0, 0.0), nw), ((x0 + width, 0.0), (0.0, 1.0), nh), ((x0 + width, height), (-1.0, 0.0), nw), ((x0, height), (0.0, -1.0), nh)];
        for ((sx, sy), (dx, dy), k) in sides {
            for i in 0..k {
                let t = (i as f64 + 0.5) * l;
                centroids.push((sx + dx * t, sy + dy * t));
                conductor.push(c);
            }
        }
    }
    assemble(centroids, conductor, l, &[potentials.0, potentials.1])
}

/// Sparse matrix in sorted coordinate form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparsePattern {
    pub n: usize,
    /// `(row, col, value)`, sorted by row then column.
    pub entries: Vec<(usize, usize, f64)>,
    pub row_nnz: Vec<usize>,
}

impl SparsePattern {
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn max_row_nnz(&self) -> usize {
        self.row_nnz.iter().copied().max().unwrap_or(0)
    }

    pub fn mean_row_nnz(&self) -> f64 {
        self.nnz() as f64 / self.n as f64
    }

    pub fn to_dense(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.n, self.n);
        for &(r, c, v) in &self.entries {
            m[(r, c)] = v.into();
        }
        m
    }
}

/// Keeps `B_jk` where the centroid distance is at most `delta`.
pub fn spai_pattern(system: &MomSystem, delta: f64) -> Result<SparsePattern> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::InvalidGeometry(format!("cutoff must be positive, got {delta}")));
    }
    let n = system.len();
    let mut entries = Vec::new();
    let mut row_nnz = vec![0; n];
    for (j, count) in row_nnz.iter_mut().enumerate() {
        for k in 0..n {
            if system.distance(j, k) <= delta {
                entries.push((j, k, system.b[(j, k)].re));
                *count += 1;
            }
        }
    }
    Ok(SparsePattern { n, entries, row_nnz })
}
