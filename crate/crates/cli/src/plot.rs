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

//! Minimal log-log SVG charts.

use std::fmt::Write as _;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const MARGIN: f64 = 64.0;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

/// Decade range covering every positive value.
fn decades(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.filter(|v| *v > 0.0).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    let (lo, hi) = (lo.log10().floor(), hi.log10().ceil());
    (lo, if hi > lo { hi } else { lo + 1.0 })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The first series is drawn as markers, the rest as lines.
pub fn log_log_svg(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let all = || series.iter().flat_map(|s| s.points.iter());
    let (x0, x1) = decades(all().map(|p| p.0));
    let (y0, y1) = decades(all().map(|p| p.1));
    let px = |x: f64| MARGIN + (x.log10() - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - (y.log10() - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let w = |s: &mut String, text: String| s.push_str(&text);
    w(&mut s, format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"));
    w(&mut s, format!("<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"));
    w(&mut s, format!("<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n", WIDTH / 2.0, escape(title)));
    let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    w(&mut s, format!("<rect x=\"{left}\" y=\"{top}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", right - left, bottom - top));
    for e in (x0 as i32)..=(x1 as i32) {
        let x = px(10f64.powi(e));
        w(&mut s, format!("<line x1=\"{x:.1}\" y1=\"{top}\" x2=\"{x:.1}\" y2=\"{bottom}\" stroke=\"#ddd\"/>\n"));
        w(&mut s, format!("<text x=\"{x:.1}\" y=\"{}\" text-anchor=\"middle\">1e{e}</text>\n", bottom + 16.0));
    }
    for e in (y0 as i32)..=(y1 as i32) {
        let y = py(10f64.powi(e));
        w(&mut s, format!("<line x1=\"{left}\" y1=\"{y:.1}\" x2=\"{right}\" y2=\"{y:.1}\" stroke=\"#ddd\"/>\n"));
        w(&mut s, format!("<text x=\"{}\" y=\"{:.1}\" text-anchor=\"end\">1e{e}</text>\n", left - 6.0, y + 4.0));
    }
    w(&mut s, format!("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", WIDTH / 2.0, HEIGHT - 20.0, escape(x_label)));
    w(&mut s, format!("<text x=\"18\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {})\">{}</text>\n", HEIGHT / 2.0, HEIGHT / 2.0, escape(y_label)));

    for (i, series) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let pts: Vec<(f64, f64)> = series.points.iter().filter(|p| p.0 > 0.0 && p.1 > 0.0).map(|&(x, y)| (px(x), py(y))).collect();
        if i == 0 {
            for (x, y) in &pts {
                w(&mut s, format!("<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"4\" fill=\"{color}\"/>\n"));
            }
        } else {
            let mut path = String::new();
            for (x, y) in &pts {
                write!(path, "{x:.1},{y:.1} ").expect("string write");
            }
            w(&mut s, format!("<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-dasharray=\"6 4\"/>\n", path.trim_end()));
        }
        let ly = top + 18.0 + 16.0 * i as f64;
        w(&mut s, format!("<rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"{color}\"/>\n", left + 10.0, ly - 9.0));
        w(&mut s, format!("<text x=\"{}\" y=\"{ly}\">{}</text>\n", left + 26.0, escape(&series.label)));
    }
    s.push_str("</svg>\n");
    s
}
