use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{rational_rank, Rat};
use crate::geometry::Fan;

/// The complex `C_I`: subsets of `I` spanning a cone of the fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySubcomplex {
    pub vertices: Vec<usize>,
    /// Every face including the empty one, sorted by size then lexicographically.
    pub faces: Vec<Vec<usize>>,
}

/// Reduced Betti numbers over the rationals; `reduced[k + 1]` is `b~_k`,
/// starting at `k = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub reduced: Vec<usize>,
}

impl BettiVector {
    /// `b~_k` for `k >= -1`.
    pub fn get(&self, k: isize) -> usize {
        usize::try_from(k + 1).ok().and_then(|i| self.reduced.get(i).copied()).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.reduced.iter().all(|&b| b == 0)
    }
}

pub fn complex_restrict(fan: &Fan, subset: &[usize]) -> RaySubcomplex {
    let mut vertices = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let mut faces: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for cone in fan.max_cones() {
        let meet: Vec<usize> = cone.iter().copied().filter(|i| vertices.contains(i)).collect();
        for k in 0..=meet.len() {
            for f in meet.iter().copied().combinations(k) {
                faces.insert((k, f));
            }
        }
    }
    faces.insert((0, Vec::new()));
    RaySubcomplex { vertices, faces: faces.into_iter().map(|(_, f)| f).collect() }
}

/// Exact reduced homology from ranks of the boundary matrices.
pub fn reduced_homology(c: &RaySubcomplex) -> BettiVector {
    let top = c.faces.iter().map(Vec::len).max().unwrap_or(0);
    let by_size: Vec<Vec<&Vec<usize>>> =
        (0..=top).map(|k| c.faces.iter().filter(|f| f.len() == k).collect()).collect();
    // rank of the boundary from faces of size k to faces of size k - 1
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || k > top {
            return 0;
        }
        let lower = &by_size[k - 1];
        let rows: Vec<Vec<Rat>> = by_size[k]
            .iter()
            .map(|f| {
                let mut row = vec![Rat::zero(); lower.len()];
                for j in 0..f.len() {
                    let mut g = (*f).clone();
                    g.remove(j);
                    let pos = lower.iter().position(|h| **h == g).expect("complex is closed");
                    row[pos] = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
                }
                row
            })
            .collect();
        rational_rank(&rows)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    let reduced = (0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect();
    BettiVector { reduced }
}

/// Minimal ray sets spanning no cone of the fan, sorted.
pub fn primitive_collections(fan: &Fan) -> Vec<Vec<usize>> {
    let n = fan.ray_count();
    let max_size = fan.max_cones().iter().map(Vec::len).max().unwrap_or(0) + 1;
    let mut out = Vec::new();
    for k in 1..=max_size.min(n) {
        for s in (0..n).combinations(k) {
            if fan.spans_cone(&s) {
                continue;
            }
            let minimal = (0..k).all(|skip| {
                let sub: Vec<usize> =
                    s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                fan.spans_cone(&sub)
            });
            if minimal {
                out.push(s);
            }
        }
    }
    out
}

/// Nonempty supports `S` with nonzero reduced homology of `C_S`.
///
/// Without `full_sweep` only unions of primitive collections are examined;
/// with it every nonempty subset is (at most 20 rays).
pub fn nonvanishing_supports(fan: &Fan, full_sweep: bool) -> Vec<Vec<usize>> {
    let n = fan.ray_count();
    let candidates: BTreeSet<Vec<usize>> = if full_sweep {
        assert!(n <= 20, "full subset sweep is limited to 20 rays");
        (1u32..(1u32 << n))
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect()
    } else {
        let pcs = primitive_collections(fan);
        let mut unions: BTreeSet<Vec<usize>> = BTreeSet::new();
        for pc in &pcs {
            let grown: Vec<Vec<usize>> = unions
                .iter()
                .map(|u| u.iter().chain(pc).copied().sorted().dedup().collect())
                .collect();
            unions.extend(grown);
            unions.insert(pc.clone());
        }
        unions
    };
    let mut out: Vec<Vec<usize>> = candidates
        .into_iter()
        .filter(|s| !reduced_homology(&complex_restrict(fan, s)).is_zero())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
