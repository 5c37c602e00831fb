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

use num_complex::Complex64;
use proptest::prelude::*;
use walkhhl::io::*;
use walkhhl::linalg::{ComplexMatrix, ComplexVector};
use walkhhl::Error;

#[test]
fn coordinate_real_general() {
    let text = "%%MatrixMarket matrix coordinate real general\n% comment\n2 2 3\n1 1 -2\n1 2 1\n2 2 -2\n";
    let m = parse_matrix_market(text).unwrap();
    assert_eq!(m, ComplexMatrix::from_real_rows(&[&[-2.0, 1.0], &[0.0, -2.0]]));
}

#[test]
fn symmetric_and_hermitian_expand() {
    let sym = parse_matrix_market("%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 4\n2 1 3\n").unwrap();
    assert_eq!(sym, ComplexMatrix::from_real_rows(&[&[4.0, 3.0], &[3.0, 0.0]]));
    let her = parse_matrix_market("%%MatrixMarket matrix coordinate complex hermitian\n2 2 2\n1 1 1 0\n2 1 0 2\n").unwrap();
    assert_eq!(her[(0, 1)], Complex64::new(0.0, -2.0));
    assert_eq!(her[(1, 0)], Complex64::new(0.0, 2.0));
    let skew = parse_matrix_market("%%MatrixMarket matrix array real skew-symmetric\n2 2\n5\n").unwrap();
    assert_eq!(skew, ComplexMatrix::from_real_rows(&[&[0.0, -5.0], &[5.0, 0.0]]));
}

#[test]
fn array_format_is_column_major() {
    let m = parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n").unwrap();
    assert_eq!(m, ComplexMatrix::from_real_rows(&[&[1.0, 3.0], &[2.0, 4.0]]));
}

#[test]
fn parse_errors_carry_lines() {
    let bad = "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n";
    assert!(matches!(parse_matrix_market(bad), Err(Error::Parse { line: 3, .. })));
    let short = "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n";
    assert!(matches!(parse_matrix_market(short), Err(Error::Parse { .. })));
    assert!(matches!(parse_matrix_market("hello"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(parse_vector("1 2 3\n"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(read_vector("/nonexistent/walkhhl.rhs"), Err(Error::Io(_))));
}

#[test]
fn vector_formats() {
    let v = parse_vector("# rhs\n0 0\n1\n\n-0.5 2e-3\n").unwrap();
    assert_eq!(v, ComplexVector::from_vec(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(-0.5, 0.002)]));
}

fn small_matrix() -> impl Strategy<Value = ComplexMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec((any::<bool>(), -1e6f64..1e6, -1e6f64..1e6), r * c).prop_map(move |v| {
            let data = v.into_iter().map(|(z, re, im)| if z { Complex64::new(0.0, 0.0) } else { Complex64::new(re, im) }).collect();
            ComplexMatrix::from_vec(r, c, data).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matrix_round_trip_is_exact(m in small_matrix()) {
        prop_assert_eq!(parse_matrix_market(&format_matrix_market(&m)).unwrap(), m);
    }

    #[test]
    fn vector_round_trip_is_exact(v in prop::collection::vec((-1e9f64..1e9, -1e-9f64..1e-9), 0..20)) {
        let v = ComplexVector::from_vec(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect());
        prop_assert_eq!(parse_vector(&format_vector(&v)).unwrap(), v);
    }
}
