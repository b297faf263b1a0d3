use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{Cone, GeometryError};
use crate::exact::{dot_int, kernel_basis, lp_feasible, primitive, IntMatrix, LinearSystem, Rat, RatVector};

/// A fan given by its rays and its maximal cones (index sets into the rays).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<Vec<BigInt>>,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub simplicial: bool,
    pub complete: bool,
    pub intersections_are_faces: bool,
}

impl FanReport {
    pub fn all(&self) -> bool {
        self.simplicial && self.complete && self.intersections_are_faces
    }
}

impl Fan {
    /// Checks ray primitivity, index ranges and that no maximal cone is
    /// contained in another. Cone index lists are sorted.
    pub fn new(
        ambient_dim: usize,
        rays: Vec<Vec<BigInt>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Self, GeometryError> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != ambient_dim {
                return Err(GeometryError::Invalid(format!("ray {i} has the wrong length")));
            }
            if r.iter().all(Zero::is_zero) || primitive(r) != *r {
                return Err(GeometryError::Invalid(format!("ray {i} is not primitive")));
            }
        }
        if let Some((i, j)) = (0..rays.len()).tuple_combinations().find(|&(i, j)| rays[i] == rays[j]) {
            return Err(GeometryError::Invalid(format!("rays {i} and {j} coincide")));
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for mut c in max_cones {
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(GeometryError::InvalidRay(bad));
            }
            cones.push(c);
        }
        for (a, b) in (0..cones.len()).tuple_combinations() {
            let (x, y) = (&cones[a], &cones[b]);
            if x.iter().all(|i| y.contains(i)) || y.iter().all(|i| x.contains(i)) {
                return Err(GeometryError::Invalid(format!(
                    "maximal cones {a} and {b} are nested"
                )));
            }
        }
        Ok(Self { ambient_dim, rays, max_cones: cones })
    }

    /// The fan of a single cone and its faces.
    pub fn from_cone(cone: &Cone) -> Self {
        let n = cone.rays().len();
        Self::new(cone.ambient_dim(), cone.rays().to_vec(), vec![(0..n).collect()])
            .expect("cone rays are valid fan rays")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// `true` iff the ray set lies in some maximal cone (the simplicial
    /// notion of "spans a cone of the fan").
    pub fn spans_cone(&self, rays: &[usize]) -> bool {
        self.max_cones.iter().any(|c| rays.iter().all(|i| c.contains(i)))
    }

    fn matrix_of(&self, idx: &[usize]) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.rays[i].clone()).collect();
        IntMatrix::from_rows(&rows, self.ambient_dim).expect("rays share a width")
    }

    fn cone_rank(&self, cone: &[usize]) -> usize {
        if cone.is_empty() {
            0
        } else {
            self.matrix_of(cone).rank()
        }
    }

    /// Codimension-one faces of a full-dimensional maximal cone, as ray
    /// index sets.
    pub fn walls(&self, cone_index: usize) -> Vec<Vec<usize>> {
        let cone = &self.max_cones[cone_index];
        let d = self.ambient_dim;
        if cone.len() == d {
            return cone.iter().map(|&skip| cone.iter().copied().filter(|&i| i != skip).collect()).collect();
        }
        let mut walls = BTreeSet::new();
        for subset in cone.iter().copied().combinations(d.saturating_sub(1)) {
            let kernel = if subset.is_empty() {
                (0..d).map(|k| {
                    let mut e = vec![BigInt::zero(); d];
                    e[k] = 1.into();
                    e
                }).collect()
            } else {
                kernel_basis(&self.matrix_of(&subset))
            };
            if kernel.len() != 1 {
                continue;
            }
            let m = &kernel[0];
            let vals: Vec<BigInt> = cone.iter().map(|&i| dot_int(m, &self.rays[i])).collect();
            if vals.iter().all(|v| !v.is_negative()) || vals.iter().all(|v| !v.is_positive()) {
                let wall: Vec<usize> =
                    cone.iter().zip(&vals).filter(|(_, v)| v.is_zero()).map(|(&i, _)| i).collect();
                walls.insert(wall);
            }
        }
        walls.into_iter().collect()
    }

    /// `true` iff the intersection of maximal cones `a` and `b` is the cone
    /// on their common rays and a face of both: there is a separating
    /// functional vanishing exactly on the common rays.
    fn meets_in_common_face(&self, a: usize, b: usize) -> bool {
        let (x, y) = (&self.max_cones[a], &self.max_cones[b]);
        let mut sys = LinearSystem::new(self.ambient_dim);
        for &i in x.iter().chain(y.iter()).unique() {
            let row = RatVector::from_ints(&self.rays[i]);
            match (x.contains(&i), y.contains(&i)) {
                (true, true) => sys.add_eq(row, Rat::zero()),
                (true, false) => sys.add_ge(row, Rat::from_integer(1.into())),
                _ => sys.add_le(row, Rat::from_integer((-1).into())),
            }
            .expect("ray width");
        }
        lp_feasible(&sys).is_feasible()
    }

    pub fn verify(&self) -> FanReport {
        let d = self.ambient_dim;
        let simplicial = self.max_cones.iter().all(|c| self.cone_rank(c) == c.len());

        let intersections_are_faces = (0..self.max_cones.len())
            .tuple_combinations()
            .all(|(a, b)| self.meets_in_common_face(a, b));

        let full = self.max_cones.iter().all(|c| self.cone_rank(c) == d);
        let complete = full && !self.max_cones.is_empty() && {
            let mut owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for k in 0..self.max_cones.len() {
                for w in self.walls(k) {
                    owners.entry(w).or_default().push(k);
                }
            }
            let paired = d == 0 || owners.values().all(|o| o.len() == 2);
            // connectivity through shared walls
            let mut seen = vec![false; self.max_cones.len()];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(k) = stack.pop() {
                for o in owners.values().filter(|o| o.contains(&k)) {
                    for &j in o {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            paired && seen.iter().all(|&s| s)
        };
        FanReport { simplicial, complete, intersections_are_faces }
    }

    /// `|det|` of the generators of a simplicial full-dimensional cone.
    pub fn multiplicity(&self, cone_index: usize) -> Result<BigInt, GeometryError> {
        let cone = self.max_cones.get(cone_index).ok_or(GeometryError::InvalidCone(cone_index))?;
        if cone.len() != self.ambient_dim {
            return Err(GeometryError::NotSimplicial(cone_index));
        }
        let det = self.matrix_of(cone).det().abs();
        if det.is_zero() {
            return Err(GeometryError::NotSimplicial(cone_index));
        }
        Ok(det)
    }

    /// Sum of the maximal-cone multiplicities.
    pub fn total_multiplicity(&self) -> Result<BigInt, GeometryError> {
        (0..self.max_cones.len()).map(|i| self.multiplicity(i)).sum()
    }
}
