use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::PipelineError;
use crate::exact::{dot_int, kernel_basis, solve_rational, IntMatrix, Rat, RatVector};
use crate::geometry::LatticePolytope;

/// Two vertices strictly separated by the hyperplane through the others,
/// with the segment between them crossing the relative interior of the
/// others' hull at `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadonPair {
    pub pair: (usize, usize),
    pub hyperplane: Vec<usize>,
    pub z: RatVector,
}

/// A labelled Radon pair placed at height `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacementData {
    pub w1: usize,
    pub w2: usize,
    pub hyperplane: Vec<usize>,
    pub radon_point: RatVector,
    pub transform: IntMatrix,
    pub translation: Vec<BigInt>,
    pub interior_direction: Vec<BigInt>,
    /// `v_1, ..., v_{n+2}`: `w1`, `w2`, then the hyperplane vertices.
    pub placed: Vec<Vec<BigInt>>,
    /// Input vertex index of each placed vertex.
    pub order: Vec<usize>,
    /// `true` when a non-identity change of coordinates was needed.
    pub placement_corrected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QConstruction {
    pub k0: u64,
    pub apex: Vec<BigInt>,
    pub q: LatticePolytope,
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Primitive normal of the affine hyperplane through `points`, if they
/// span one.
fn hyperplane_normal(points: &[&Vec<BigInt>], dim: usize) -> Option<(Vec<BigInt>, BigInt)> {
    let base = points[0];
    let diffs: Vec<Vec<BigInt>> = points[1..].iter().map(|p| sub(p, base)).collect();
    let kernel = if diffs.is_empty() {
        (0..dim)
            .map(|k| (0..dim).map(|j| BigInt::from(u8::from(j == k))).collect())
            .collect()
    } else {
        kernel_basis(&IntMatrix::from_rows(&diffs, dim).expect("width dim"))
    };
    if kernel.len() != 1 {
        return None;
    }
    let normal = kernel.into_iter().next().expect("one vector");
    let offset = dot_int(&normal, base);
    Some((normal, offset))
}

/// Every Radon pair in lexicographic order.
pub fn radon_pair(p: &LatticePolytope) -> Result<Vec<RadonPair>, PipelineError> {
    let n = p.ambient_dim();
    if !p.is_full_dimensional() {
        return Err(PipelineError::NotFullDimensional);
    }
    if p.vertex_count() != n + 2 {
        return Err(PipelineError::WrongVertexCount { expected: n + 2, got: p.vertex_count() });
    }
    let v = p.vertices();
    let mut out = Vec::new();
    for (i, j) in (0..v.len()).tuple_combinations() {
        let rest: Vec<usize> = (0..v.len()).filter(|&k| k != i && k != j).collect();
        let pts: Vec<&Vec<BigInt>> = rest.iter().map(|&k| &v[k]).collect();
        let Some((normal, offset)) = hyperplane_normal(&pts, n) else { continue };
        let hi = dot_int(&normal, &v[i]) - &offset;
        let hj = dot_int(&normal, &v[j]) - &offset;
        if hi.is_zero() || hj.is_zero() || hi.sign() == hj.sign() {
            continue;
        }
        // z = w_i + t (w_j - w_i) with t = hi / (hi - hj)
        let t = Rat::new(hi.clone(), &hi - &hj);
        let z: RatVector = v[i]
            .iter()
            .zip(&v[j])
            .map(|(a, b)| Rat::from_integer(a.clone()) + &t * Rat::from_integer(b - a))
            .collect();
        // barycentric coordinates of z in the hyperplane simplex
        let mut rows: Vec<Vec<Rat>> = (0..n)
            .map(|c| pts.iter().map(|w| Rat::from_integer(w[c].clone())).collect())
            .collect();
        rows.push(vec![Rat::one(); pts.len()]);
        let mut rhs = z.0.clone();
        rhs.push(Rat::one());
        let Some(beta) = solve_rational(&rows, &rhs) else { continue };
        if beta.iter().all(|b| b.is_positive()) {
            out.push(RadonPair { pair: (i, j), hyperplane: rest, z });
        }
    }
    if out.is_empty() {
        return Err(PipelineError::NoRadonPair);
    }
    Ok(out)
}

/// Places `P` with `w1` at `-e_{n+1}` and `direction` sent to `e_1`.
pub fn place(
    p: &LatticePolytope,
    radon: &RadonPair,
    w1: usize,
    direction: &[BigInt],
) -> Result<PlacementData, PipelineError> {
    let (a, b) = radon.pair;
    let w2 = if w1 == a { b } else { a };
    let placement = p.place_with_direction(w1, direction)?;
    let mut order = vec![w1, w2];
    order.extend(radon.hyperplane.iter().copied());
    let placed = order.iter().map(|&k| placement.vertices[k].clone()).collect();
    let moved = placement.transform.mul_vec(&p.vertices()[w1]);
    let translation = moved.iter().map(|x| -x).collect();
    let placement_corrected = placement.transform != IntMatrix::identity(p.ambient_dim());
    Ok(PlacementData {
        w1,
        w2,
        hyperplane: radon.hyperplane.clone(),
        radon_point: radon.z.clone(),
        transform: placement.transform,
        translation,
        interior_direction: direction.to_vec(),
        placed,
        order,
        placement_corrected,
    })
}

/// `(-e_1, k)` in `N + Z`.
pub fn apex(n: usize, k: u64) -> Vec<BigInt> {
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = -BigInt::one();
    a[n] = BigInt::from(k);
    a
}

/// Whether `0` and `v_1` lie strictly on the same side of the hyperplane
/// through `v_3, ..., v_{n+2}` and the apex at height `k`.
pub fn same_side(placed: &[Vec<BigInt>], k: u64) -> bool {
    let n = placed.len() - 2;
    let top = apex(n, k);
    let mut pts: Vec<&Vec<BigInt>> = placed[2..].iter().collect();
    pts.push(&top);
    let Some((normal, offset)) = hyperplane_normal(&pts, n + 1) else { return false };
    let h0 = -&offset;
    let h1 = dot_int(&normal, &placed[0]) - &offset;
    !h0.is_zero() && !h1.is_zero() && h0.sign() == h1.sign()
}

/// The minimal `k_0 <= cap`.
pub fn find_k0(placed: &[Vec<BigInt>], cap: u64) -> Option<u64> {
    (1..=cap).find(|&k| same_side(placed, k))
}

/// Facets of `Q` expected from the face structure of `P`, as sets of
/// placed-vertex indices (`n + 2` is the apex).
pub fn expected_q_facets(p: &LatticePolytope, placement: &PlacementData) -> Result<BTreeSet<Vec<usize>>, PipelineError> {
    let n = p.ambient_dim();
    let pos = |k: usize| placement.order.iter().position(|&o| o == k).expect("every vertex placed");
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    out.insert((0..n + 2).collect());
    for f in p.facets()? {
        let mut idx: Vec<usize> = f.vertices.iter().map(|&k| pos(k)).collect();
        idx.push(n + 2);
        idx.sort_unstable();
        out.insert(idx);
    }
    Ok(out)
}

/// Builds `Q` and checks primitivity, interiority of the origin and its
/// facet list. The error string names the failed property.
pub fn build_q(p: &LatticePolytope, placement: &PlacementData, k0: u64) -> Result<QConstruction, String> {
    let n = p.ambient_dim();
    let top = apex(n, k0);
    let mut verts = placement.placed.clone();
    verts.push(top.clone());
    if verts.iter().any(|v| crate::exact::primitive(v) != *v) {
        return Err("a vertex of Q is not primitive".into());
    }
    let q = LatticePolytope::new(n + 1, verts).map_err(|e| format!("Q is degenerate: {e}"))?;
    if !q.contains_origin_in_interior().map_err(|e| e.to_string())? {
        return Err("the origin is not interior to Q".into());
    }
    let facets: BTreeSet<Vec<usize>> =
        q.facets().map_err(|e| e.to_string())?.into_iter().map(|f| f.vertices).collect();
    if facets != expected_q_facets(p, placement).map_err(|e| e.to_string())? {
        return Err("the facets of Q do not match the faces of P".into());
    }
    Ok(QConstruction { k0, apex: top, q })
}

/// Searches Radon pairs, labelings and interior directions in order; the
/// first construction passing every check wins.
pub fn construct_q(
    p: &LatticePolytope,
    k0_cap: u64,
    direction_limit: usize,
) -> Result<(PlacementData, QConstruction), PipelineError> {
    let pairs = radon_pair(p)?;
    let mut cap_hits = 0usize;
    let mut tried = 0usize;
    let mut last_reason = String::new();
    for radon in &pairs {
        let (a, b) = radon.pair;
        for w1 in [a, b] {
            for u in p.interior_directions(w1, direction_limit.max(1))? {
                tried += 1;
                let placement = place(p, radon, w1, &u)?;
                let Some(k0) = find_k0(&placement.placed, k0_cap) else {
                    cap_hits += 1;
                    continue;
                };
                match build_q(p, &placement, k0) {
                    Ok(qc) => return Ok((placement, qc)),
                    Err(reason) => last_reason = reason,
                }
            }
        }
    }
    if cap_hits == tried {
        Err(PipelineError::K0CapExceeded { cap: k0_cap })
    } else {
        Err(PipelineError::VerificationFailed(last_reason))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ints;

    fn square() -> LatticePolytope {
        LatticePolytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn square_has_its_two_diagonals() {
        let pairs = radon_pair(&square()).unwrap();
        let got: Vec<(usize, usize)> = pairs.iter().map(|r| r.pair).collect();
        assert_eq!(got, vec![(0, 3), (1, 2)]);
        let half = Rat::new(1.into(), 2.into());
        assert_eq!(pairs[0].z.0, vec![half.clone(), half]);
    }

    #[test]
    fn boundary_crossings_are_excluded() {
        // apex (1,1,1) over the square: the diagonals cross on the base, not inside a triangle
        let pyramid = LatticePolytope::from_i64(
            3,
            &[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 0], &[1, 1, 1]],
        )
        .unwrap();
        assert!(matches!(radon_pair(&pyramid), Err(PipelineError::NoRadonPair)));
        let bipyramid = LatticePolytope::from_i64(
            3,
            &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        )
        .unwrap();
        assert!(!radon_pair(&bipyramid).unwrap().is_empty());
    }

    #[test]
    fn square_k0_matches_brute_force() {
        let sq = square();
        let (placement, qc) = construct_q(&sq, 10_000, 8).unwrap();
        assert_eq!((placement.w1, placement.w2), (0, 3));
        assert_eq!(
            placement.placed,
            vec![ints(&[0, 0, -1]), ints(&[1, 0, -1]), ints(&[1, -1, -1]), ints(&[0, 1, -1])]
        );
        assert!(placement.placement_corrected);
        let brute = (1..50u64).find(|&k| same_side(&placement.placed, k)).unwrap();
        assert_eq!(qc.k0, brute);
        assert_eq!(qc.k0, 3);
        assert_eq!(qc.q.vertex_count(), 5);
        let facets = qc.q.facets().unwrap();
        assert_eq!(facets.len(), 5);
        assert_eq!(facets.iter().filter(|f| f.vertices.contains(&4)).count(), 4);
    }

    #[test]
    fn k0_cap_zero_exhausts() {
        assert!(matches!(construct_q(&square(), 0, 8), Err(PipelineError::K0CapExceeded { cap: 0 })));
    }
}
