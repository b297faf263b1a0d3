//! Inputs shared by the benchmarks.

use nccr_core::exact::IntMatrix;
use nccr_core::BigInt;

/// A deterministic dense `n x n` integer matrix with small entries.
pub fn dense_matrix(n: usize, seed: i64) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((seed + 7 * i as i64 + 13 * j as i64 + (i * j) as i64) % 19 - 9)).collect())
        .collect();
    IntMatrix::from_rows(&rows, n).expect("square")
}
