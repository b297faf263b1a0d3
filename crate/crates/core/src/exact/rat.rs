use std::fmt;
use std::ops::{Deref, DerefMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;

/// Exact rational; always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Serializes as `"numerator/denominator"`, denominator always present.
pub fn rat_to_string(q: &Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"a/b"` or a bare integer `"a"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatVector(pub Vec<Rat>);

impl RatVector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![Rat::zero(); n])
    }

    pub fn from_ints(v: &[BigInt]) -> Self {
        Self(v.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn dot_int(&self, v: &[BigInt]) -> Rat {
        assert_eq!(self.len(), v.len(), "dot product length mismatch");
        self.iter()
            .zip(v)
            .filter(|(_, b)| !b.is_zero())
            .map(|(a, b)| a * Rat::from_integer(b.clone()))
            .sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.iter().map(rat_to_string).collect()
    }

    /// Least common multiple of the denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
    }

    /// The smallest positive integer multiple, as an integer vector.
    pub fn clear_denominators(&self) -> Vec<BigInt> {
        let d = self.common_denominator();
        self.iter().map(|q| (q * Rat::from_integer(d.clone())).to_integer()).collect()
    }
}

impl Deref for RatVector {
    type Target = Vec<Rat>;
    fn deref(&self) -> &Vec<Rat> {
        &self.0
    }
}

impl DerefMut for RatVector {
    fn deref_mut(&mut self) -> &mut Vec<Rat> {
        &mut self.0
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter().map(|q| q.to_string())).finish()
    }
}

impl FromIterator<Rat> for RatVector {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Integer vector from machine integers.
pub fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides out the gcd of the entries; the zero vector is returned as is.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rat>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..m[i].len() {
                    let d = &f * &m[row][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rational_rank(rows: &[Vec<Rat>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Some solution of `A x = b` over the rationals (free variables set to
/// zero), or `None` when the system is inconsistent.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.len(), b.len(), "right-hand side length mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, cols);
    if m.iter().skip(pivots.len()).any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// Dimension of the affine hull of a point set (`-1` is reported as `0`
/// for the empty set).
pub fn affine_rank(points: &[Vec<BigInt>]) -> usize {
    let Some(base) = points.first() else { return 0 };
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        return 0;
    }
    IntMatrix::from_rows(&diffs, base.len()).expect("points share a dimension").rank()
}
