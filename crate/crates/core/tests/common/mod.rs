#![allow(dead_code)]

use proptest::prelude::*;
use tropolocate_core::{TropMatrix, TropVector, Tropical};

pub const TOL: f64 = 1e-9;

/// Quarter-integers in [-20, 20]: exact in binary, so sums never round.
pub fn finite_value() -> impl Strategy<Value = f64> {
    (-80i32..=80).prop_map(|k| f64::from(k) / 4.0)
}

pub fn scalar() -> impl Strategy<Value = Tropical> {
    prop_oneof![
        1 => Just(Tropical::ZERO),
        8 => finite_value().prop_map(Tropical::new),
    ]
}

pub fn regular_vector(n: usize) -> impl Strategy<Value = TropVector> {
    proptest::collection::vec(finite_value(), n).prop_map(|v| TropVector::from_f64s(&v).unwrap())
}

pub fn int_matrix(n: usize, lo: i32, hi: i32) -> impl Strategy<Value = Vec<Vec<f64>>> {
    proptest::collection::vec(
        proptest::collection::vec((lo..=hi).prop_map(f64::from), n),
        n,
    )
}

/// Shifts every entry down by `Tr(A)` when it is positive, which makes every
/// closed walk non-positive (a walk of length L loses L·Tr ≥ Tr). With
/// `exact`, the loop at node 0 is then raised to 0 so that `Tr(A) = 0`.
pub fn normalize_trace(rows: &[Vec<f64>], exact: bool) -> TropMatrix {
    let a = TropMatrix::from_rows(rows).unwrap();
    let t = a.tr().unwrap().value();
    let mut rows: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| r.iter().map(|v| if t > 0.0 { v - t } else { *v }).collect())
        .collect();
    if exact {
        rows[0][0] = 0.0;
    }
    TropMatrix::from_rows(&rows).unwrap()
}

/// Plain Chebyshev distance.
pub fn chebyshev(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// All integer points of `[lo, hi]^n`.
pub fn integer_grid(n: usize, lo: i32, hi: i32) -> Vec<Vec<f64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |k| {
                    let mut q = p.clone();
                    q.push(f64::from(k));
                    q
                })
            })
            .collect();
    }
    out
}
