use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, ArithError> {
        if data.len() != rows * cols {
            return Err(ArithError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> Result<Self, ArithError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(ArithError::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().cloned());
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    /// Convenience constructor for small literal matrices.
    ///
    /// Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&rows, cols).expect("ragged literal matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(&rows, self.cols).expect("rows share a width")
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (h, _) = hnf(self);
        (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }

    /// Inverse of a unimodular matrix, or `None` if `|det| != 1`.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        if self.rows != self.cols || !self.det().abs().is_one() {
            return None;
        }
        // W * self = HNF(self) = identity for unimodular input.
        let (h, w) = hnf(self);
        debug_assert_eq!(h, IntMatrix::identity(self.rows));
        Some(w)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
    }
}

/// Row Hermite normal form: returns `(H, U)` with `U * A = H`, `U`
/// unimodular, `H` in echelon form with positive pivots and the entries
/// above each pivot reduced into `[0, pivot)`.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        loop {
            // smallest-magnitude nonzero pivot, lowest row on ties
            let pivot = (row..a.rows)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&x, &y| h[(x, col)].abs().cmp(&h[(y, col)].abs()).then(x.cmp(&y)));
            let Some(p) = pivot else { break };
            h.swap_rows(row, p);
            u.swap_rows(row, p);
            let mut done = true;
            for i in row + 1..a.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = -(&h[(i, col)] / &h[(row, col)]);
                h.add_row_multiple(i, row, &q);
                u.add_row_multiple(i, row, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        let pivot = h[(row, col)].clone();
        for i in 0..row {
            let q = -h[(i, col)].div_floor(&pivot);
            h.add_row_multiple(i, row, &q);
            u.add_row_multiple(i, row, &q);
        }
        row += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(S, U, V)` with `S = U * A * V` diagonal,
/// nonnegative, and each diagonal entry dividing the next.
pub fn snf(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (m, n) = (a.rows, a.cols);
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if s[(bi, bj)].abs() <= s[(i, j)].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&s[(i, t)] / &s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&s[(t, j)] / &s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce the divisibility chain
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)]))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// A saturated lattice basis of `{x in Z^cols : A x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    // U * A^T = H; the rows of U facing zero rows of H span the left kernel
    // of A^T, and U unimodular makes that basis saturated.
    let at = a.transpose();
    let (h, u) = hnf(&at);
    (0..h.rows())
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row(i).to_vec())
        .collect()
}

/// An integral solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let (s, u, v) = snf(a);
    let ub = u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, target) in ub.iter().enumerate() {
        let d = if i < a.cols() { &s[(i, i)] } else { &BigInt::zero() };
        if d.is_zero() {
            if !target.is_zero() {
                return None;
            }
        } else {
            let (q, r) = target.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(v.mul_vec(&y))
}
