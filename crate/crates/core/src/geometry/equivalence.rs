use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{GeometryError, LatticePolytope};
use crate::exact::{dot_int, solve_rational, IntMatrix, Rat};

pub const DEFAULT_VERTEX_CAP: usize = 12;

/// `x -> matrix * x + translation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: IntMatrix,
    pub translation: Vec<BigInt>,
}

impl AffineMap {
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x).into_iter().zip(&self.translation).map(|(a, b)| a + b).collect()
    }
}

/// Lattice-invariant fingerprint: for each facet, the sorted lattice
/// distances of all vertices from it.
fn fingerprint(p: &LatticePolytope) -> Result<Vec<Vec<BigInt>>, GeometryError> {
    let mut out: Vec<Vec<BigInt>> = p
        .facets()?
        .iter()
        .map(|f| {
            let mut h: Vec<BigInt> =
                p.vertices().iter().map(|v| &f.offset - dot_int(&f.normal, v)).collect();
            h.sort();
            h
        })
        .collect();
    out.sort();
    Ok(out)
}

fn diff(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Searches for a unimodular affine map carrying the vertex set of `p`
/// onto that of `q`. Both polytopes must be full-dimensional.
pub fn lattice_equivalent(
    p: &LatticePolytope,
    q: &LatticePolytope,
    cap: usize,
) -> Result<Option<AffineMap>, GeometryError> {
    for x in [p, q] {
        if x.vertex_count() > cap {
            return Err(GeometryError::CapExceeded { count: x.vertex_count(), cap });
        }
    }
    if p.ambient_dim() != q.ambient_dim() || p.vertex_count() != q.vertex_count() {
        return Ok(None);
    }
    if fingerprint(p)? != fingerprint(q)? {
        return Ok(None);
    }
    let n = p.ambient_dim();
    let pv = p.vertices();
    let qv = q.vertices();
    let target: BTreeSet<&Vec<BigInt>> = qv.iter().collect();

    // an affine basis of p: vertex 0 plus n vertices with independent differences
    let mut basis = vec![0usize];
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 1..pv.len() {
        if basis.len() == n + 1 {
            break;
        }
        let mut trial = rows.clone();
        trial.push(diff(&pv[i], &pv[0]));
        if IntMatrix::from_rows(&trial, n).expect("width n").rank() == trial.len() {
            rows = trial;
            basis.push(i);
        }
    }
    // columns of dp are the basis differences; solve A dp = dq row by row
    let dp_t: Vec<Vec<Rat>> =
        rows.iter().map(|r| r.iter().cloned().map(Rat::from_integer).collect()).collect();

    for image in (0..qv.len()).permutations(n + 1) {
        let q0 = &qv[image[0]];
        let dq: Vec<Vec<BigInt>> = image[1..].iter().map(|&j| diff(&qv[j], q0)).collect();
        let mut matrix_rows = Vec::with_capacity(n);
        let mut ok = true;
        for c in 0..n {
            let rhs: Vec<Rat> = dq.iter().map(|v| Rat::from_integer(v[c].clone())).collect();
            match solve_rational(&dp_t, &rhs) {
                Some(row) if row.iter().all(|x| x.is_integer()) => {
                    matrix_rows.push(row.into_iter().map(|x| x.to_integer()).collect::<Vec<_>>())
                }
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let matrix = if n == 0 {
            IntMatrix::zeros(0, 0)
        } else {
            IntMatrix::from_rows(&matrix_rows, n).expect("width n")
        };
        if n > 0 && !matrix.det().abs().is_one() {
            continue;
        }
        let moved = if n == 0 { Vec::new() } else { matrix.mul_vec(&pv[0]) };
        let translation: Vec<BigInt> = q0.iter().zip(&moved).map(|(a, b)| a - b).collect();
        let map = AffineMap { matrix, translation };
        let images: BTreeSet<Vec<BigInt>> = pv.iter().map(|v| map.apply(v)).collect();
        if images.len() == target.len() && images.iter().all(|v| target.contains(v)) {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ints;

    fn square() -> LatticePolytope {
        LatticePolytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn shear_and_translation_recovered() {
        let p = square();
        let shear = IntMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        let t = ints(&[3, -1]);
        let moved = AffineMap { matrix: shear, translation: t };
        let q = LatticePolytope::new(2, p.vertices().iter().map(|v| moved.apply(v)).collect()).unwrap();
        let found = lattice_equivalent(&p, &q, DEFAULT_VERTEX_CAP).unwrap().unwrap();
        let images: BTreeSet<Vec<BigInt>> = p.vertices().iter().map(|v| found.apply(v)).collect();
        let expect: BTreeSet<Vec<BigInt>> = q.vertices().iter().cloned().collect();
        assert_eq!(images, expect);
        assert!(found.matrix.det().abs().is_one());
    }

    #[test]
    fn inequivalent_pairs() {
        let tri = LatticePolytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(lattice_equivalent(&square(), &tri, DEFAULT_VERTEX_CAP).unwrap(), None);
        let rect = LatticePolytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]).unwrap();
        assert_eq!(lattice_equivalent(&square(), &rect, DEFAULT_VERTEX_CAP).unwrap(), None);
    }

    #[test]
    fn reflexive_and_cap() {
        let s = square();
        assert!(lattice_equivalent(&s, &s, DEFAULT_VERTEX_CAP).unwrap().is_some());
        assert!(matches!(lattice_equivalent(&s, &s, 3), Err(GeometryError::CapExceeded { .. })));
    }
}
