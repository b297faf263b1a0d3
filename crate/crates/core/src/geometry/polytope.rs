use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Cone, Fan, GeometryError};
use crate::exact::{
    affine_rank, dot_int, hnf, kernel_basis, lp_feasible, primitive, IntMatrix, LinearSystem,
    Rat, RatVector,
};

/// Convex hull of finitely many lattice points, stored by its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<BigInt>>,
}

/// A facet `normal . x <= offset`, with the indices of the vertices on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    pub vertices: Vec<usize>,
}

/// Result of placing a polytope at height `-1` with a chosen vertex at
/// `-e_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    /// Unimodular `A` acting on `N`.
    pub transform: IntMatrix,
    /// The vertex sent to the origin of `N`.
    pub base_vertex: usize,
    /// Interior direction of the vertex cone, sent to `e_1` by `A`.
    pub direction: Vec<BigInt>,
    /// `(A (v - w), -1)` for every vertex `v`, in input order.
    pub vertices: Vec<Vec<BigInt>>,
}

/// `true` iff `point` lies in the convex hull of `others`.
pub(crate) fn in_convex_hull(point: &[BigInt], others: &[&Vec<BigInt>]) -> bool {
    if others.is_empty() {
        return false;
    }
    let k = others.len();
    let mut sys = LinearSystem::new(k);
    for c in 0..point.len() {
        let row: RatVector = others.iter().map(|w| Rat::from_integer(w[c].clone())).collect();
        sys.add_eq(row, Rat::from_integer(point[c].clone())).expect("width k");
    }
    sys.add_eq(RatVector(vec![Rat::one(); k]), Rat::one()).expect("width k");
    for i in 0..k {
        let mut e = RatVector::zeros(k);
        e[i] = Rat::one();
        sys.add_ge(e, Rat::zero()).expect("width k");
    }
    lp_feasible(&sys).is_feasible()
}

impl LatticePolytope {
    /// Validates that the points are distinct and each one is a vertex of
    /// their convex hull.
    pub fn new(ambient_dim: usize, vertices: Vec<Vec<BigInt>>) -> Result<Self, GeometryError> {
        if vertices.is_empty() {
            return Err(GeometryError::Invalid("polytope without vertices".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != ambient_dim) {
            return Err(GeometryError::Invalid(format!(
                "vertex of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        for (i, j) in (0..vertices.len()).tuple_combinations() {
            if vertices[i] == vertices[j] {
                return Err(GeometryError::Invalid(format!("vertices {i} and {j} coincide")));
            }
        }
        for (i, v) in vertices.iter().enumerate() {
            let others: Vec<&Vec<BigInt>> =
                vertices.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, w)| w).collect();
            if in_convex_hull(v, &others) {
                return Err(GeometryError::Invalid(format!(
                    "point {i} lies in the convex hull of the others"
                )));
            }
        }
        Ok(Self { ambient_dim, vertices })
    }

    pub fn from_i64(ambient_dim: usize, vertices: &[&[i64]]) -> Result<Self, GeometryError> {
        Self::new(ambient_dim, vertices.iter().map(|v| crate::exact::ints(v)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        affine_rank(&self.vertices)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn require_full_dimensional(&self) -> Result<(), GeometryError> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(GeometryError::NotFullDimensional { dim: self.dim(), ambient: self.ambient_dim })
        }
    }

    /// Irredundant H-representation with primitive outward normals, sorted
    /// lexicographically by normal.
    pub fn facets(&self) -> Result<Vec<Facet>, GeometryError> {
        self.require_full_dimensional()?;
        let n = self.ambient_dim;
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut found: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
        for subset in (0..self.vertices.len()).combinations(n) {
            let base = &self.vertices[subset[0]];
            let diffs: Vec<Vec<BigInt>> = subset[1..]
                .iter()
                .map(|&i| self.vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            let m = IntMatrix::from_rows(&diffs, n).expect("rows share a width");
            let kernel = kernel_basis(&m);
            if kernel.len() != 1 {
                continue;
            }
            let normal = &kernel[0];
            let offset = dot_int(normal, base);
            let values: Vec<BigInt> = self.vertices.iter().map(|v| dot_int(normal, v)).collect();
            if values.iter().all(|x| x <= &offset) {
                found.insert((normal.clone(), offset));
            } else if values.iter().all(|x| x >= &offset) {
                found.insert((normal.iter().map(|x| -x).collect(), -offset));
            }
        }
        Ok(found
            .into_iter()
            .map(|(normal, offset)| {
                let vertices = (0..self.vertices.len())
                    .filter(|&i| dot_int(&normal, &self.vertices[i]) == offset)
                    .collect();
                Facet { normal, offset, vertices }
            })
            .collect())
    }

    /// Every nonempty face (including the polytope itself) as a sorted
    /// vertex-index set, together with its dimension.
    pub fn all_faces(&self) -> Result<Vec<(usize, Vec<usize>)>, GeometryError> {
        let facets = self.facets()?;
        let mut faces: BTreeSet<Vec<usize>> =
            facets.iter().map(|f| f.vertices.clone()).collect();
        let mut frontier: Vec<Vec<usize>> = faces.iter().cloned().collect();
        while let Some(face) = frontier.pop() {
            for facet in &facets {
                let meet: Vec<usize> =
                    face.iter().copied().filter(|i| facet.vertices.contains(i)).collect();
                if !meet.is_empty() && faces.insert(meet.clone()) {
                    frontier.push(meet);
                }
            }
        }
        faces.insert((0..self.vertices.len()).collect());
        let mut out: Vec<(usize, Vec<usize>)> = faces
            .into_iter()
            .map(|f| {
                let pts: Vec<Vec<BigInt>> = f.iter().map(|&i| self.vertices[i].clone()).collect();
                (affine_rank(&pts), f)
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// The faces of dimension `d`, as vertex-index sets.
    pub fn faces(&self, d: usize) -> Result<Vec<Vec<usize>>, GeometryError> {
        Ok(self.all_faces()?.into_iter().filter(|(k, _)| *k == d).map(|(_, f)| f).collect())
    }

    /// Every facet is a simplex.
    pub fn is_simplicial(&self) -> Result<bool, GeometryError> {
        let n = self.ambient_dim;
        Ok(self.facets()?.iter().all(|f| f.vertices.len() == n))
    }

    /// `Cone(P x {1})`.
    pub fn cone_over(&self) -> Cone {
        let rays = self
            .vertices
            .iter()
            .map(|v| {
                let mut r = v.clone();
                r.push(BigInt::one());
                r
            })
            .collect();
        Cone::new(self.ambient_dim + 1, rays).expect("height-one generators are primitive")
    }

    /// Origin in the interior and every facet at lattice distance one.
    pub fn is_reflexive(&self) -> Result<bool, GeometryError> {
        Ok(self.facets()?.iter().all(|f| f.offset.is_one()))
    }

    pub fn contains_origin_in_interior(&self) -> Result<bool, GeometryError> {
        Ok(self.facets()?.iter().all(|f| f.offset.is_positive()))
    }

    /// Fan of cones over the facets; rays are the primitive vertex
    /// directions in vertex order.
    pub fn face_fan(&self) -> Result<Fan, GeometryError> {
        if !self.contains_origin_in_interior()? {
            return Err(GeometryError::OriginNotInterior);
        }
        let rays = self.vertices.iter().map(|v| primitive(v)).collect();
        let cones = self.facets()?.into_iter().map(|f| f.vertices).collect();
        Fan::new(self.ambient_dim, rays, cones)
    }

    /// `{(x, y) : x in P, y >= 0, normal . x + y <= offset}` over the facet
    /// with the given index in [`facets`](Self::facets) order.
    pub fn wedge(&self, facet_index: usize) -> Result<LatticePolytope, GeometryError> {
        let facets = self.facets()?;
        let facet = facets.get(facet_index).ok_or(GeometryError::InvalidFacet(facet_index))?;
        let mut out = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let mut low = v.clone();
            low.push(BigInt::zero());
            out.push(low);
            if !facet.vertices.contains(&i) {
                let mut high = v.clone();
                high.push(&facet.offset - dot_int(&facet.normal, v));
                out.push(high);
            }
        }
        LatticePolytope::new(self.ambient_dim + 1, out)
    }

    /// Primitive directions of the edges leaving vertex `w`.
    pub fn edge_directions(&self, w: usize) -> Result<Vec<Vec<BigInt>>, GeometryError> {
        if w >= self.vertices.len() {
            return Err(GeometryError::InvalidVertex(w));
        }
        Ok(self
            .faces(1)?
            .into_iter()
            .filter(|e| e.contains(&w))
            .map(|e| {
                let other = if e[0] == w { e[1] } else { e[0] };
                let d: Vec<BigInt> = self.vertices[other]
                    .iter()
                    .zip(&self.vertices[w])
                    .map(|(a, b)| a - b)
                    .collect();
                primitive(&d)
            })
            .collect())
    }

    /// Interior directions of the vertex cone at `w`, most preferred
    /// first: the primitive sum of the edge directions, then primitive
    /// combinations with coefficients in `{1, 2}` (deduplicated).
    pub fn interior_directions(&self, w: usize, limit: usize) -> Result<Vec<Vec<BigInt>>, GeometryError> {
        self.require_full_dimensional()?;
        let edges = self.edge_directions(w)?;
        let mut out: Vec<Vec<BigInt>> = Vec::new();
        let k = edges.len();
        for mask in 0u64..(1u64 << k.min(20)) {
            if out.len() >= limit {
                break;
            }
            let mut sum = vec![BigInt::zero(); self.ambient_dim];
            for (i, e) in edges.iter().enumerate() {
                let c = BigInt::from(1 + ((mask >> i) & 1));
                for (s, x) in sum.iter_mut().zip(e) {
                    *s += &c * x;
                }
            }
            let u = primitive(&sum);
            if !out.contains(&u) {
                out.push(u);
            }
        }
        Ok(out)
    }

    /// Places the polytope at height `-1` with vertex `w` at `-e_{n+1}`,
    /// after a unimodular change of coordinates sending the default
    /// interior direction at `w` to `e_1`.
    pub fn unimodular_placement(&self, w: usize) -> Result<Placement, GeometryError> {
        let u = self
            .interior_directions(w, 1)?
            .into_iter()
            .next()
            .ok_or(GeometryError::InvalidVertex(w))?;
        self.place_with_direction(w, &u)
    }

    /// Placement using a caller-chosen primitive direction `u`.
    pub fn place_with_direction(&self, w: usize, u: &[BigInt]) -> Result<Placement, GeometryError> {
        if w >= self.vertices.len() {
            return Err(GeometryError::InvalidVertex(w));
        }
        let column =
            IntMatrix::from_rows(&u.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>(), 1)
                .expect("single column");
        // U u = (gcd, 0, ..., 0); gcd = 1 for primitive u
        let (h, transform) = hnf(&column);
        if !h[(0, 0)].is_one() {
            return Err(GeometryError::Invalid("placement direction is not primitive".into()));
        }
        let origin = &self.vertices[w];
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let d: Vec<BigInt> = v.iter().zip(origin).map(|(a, b)| a - b).collect();
                let mut placed = transform.mul_vec(&d);
                placed.push(-BigInt::one());
                placed
            })
            .collect();
        Ok(Placement { transform, base_vertex: w, direction: u.to_vec(), vertices })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ints;

    fn square() -> LatticePolytope {
        LatticePolytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    fn triangle() -> LatticePolytope {
        LatticePolytope::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]]).unwrap()
    }

    #[test]
    fn rejects_bad_vertex_lists() {
        assert!(LatticePolytope::from_i64(2, &[&[0, 0], &[0, 0], &[1, 0]]).is_err());
        assert!(LatticePolytope::from_i64(1, &[&[0], &[1], &[2]]).is_err());
        assert!(LatticePolytope::from_i64(2, &[]).is_err());
    }

    #[test]
    fn square_facets() {
        let f = square().facets().unwrap();
        assert_eq!(f.len(), 4);
        let normals: BTreeSet<Vec<BigInt>> = f.iter().map(|x| x.normal.clone()).collect();
        let expect: BTreeSet<Vec<BigInt>> =
            [ints(&[1, 0]), ints(&[-1, 0]), ints(&[0, 1]), ints(&[0, -1])].into_iter().collect();
        assert_eq!(normals, expect);
    }

    #[test]
    fn reflexive_triangle_facets_have_offset_one() {
        let t = triangle();
        let f = t.facets().unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|x| x.offset.is_one() && x.vertices.len() == 2));
        assert!(t.is_reflexive().unwrap());
    }

    #[test]
    fn segment_in_plane_is_not_full_dimensional() {
        let s = LatticePolytope::from_i64(2, &[&[0, 0], &[1, 1]]).unwrap();
        assert!(matches!(s.facets(), Err(GeometryError::NotFullDimensional { .. })));
    }

    #[test]
    fn square_faces() {
        assert_eq!(square().faces(1).unwrap().len(), 4);
        assert_eq!(square().faces(0).unwrap().len(), 4);
        assert_eq!(square().faces(2).unwrap(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cone_over_examples() {
        assert_eq!(square().cone_over().rays().len(), 4);
        let point = LatticePolytope::new(0, vec![vec![]]).unwrap();
        assert_eq!(point.cone_over().rays(), &[ints(&[1])]);
        let seg = LatticePolytope::from_i64(1, &[&[0], &[2]]).unwrap();
        assert_eq!(seg.cone_over().rays(), &[ints(&[0, 1]), ints(&[2, 1])]);
    }

    #[test]
    fn reflexivity() {
        let big = LatticePolytope::from_i64(2, &[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]).unwrap();
        assert!(big.is_reflexive().unwrap());
        assert!(!square().is_reflexive().unwrap());
    }

    #[test]
    fn face_fans() {
        let big = LatticePolytope::from_i64(2, &[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]).unwrap();
        assert_eq!(big.face_fan().unwrap().max_cones().len(), 4);
        let p2 = triangle().face_fan().unwrap();
        assert_eq!(p2.max_cones().len(), 3);
        assert!(p2.verify().complete);
        assert!(matches!(square().face_fan(), Err(GeometryError::OriginNotInterior)));
    }

    #[test]
    fn wedges() {
        let seg = LatticePolytope::from_i64(1, &[&[0], &[1]]).unwrap();
        let facets = seg.facets().unwrap();
        let lower = facets.iter().position(|f| f.normal == ints(&[-1])).unwrap();
        let upper = facets.iter().position(|f| f.normal == ints(&[1])).unwrap();
        let w = seg.wedge(lower).unwrap();
        assert_eq!(w.vertices(), &[ints(&[0, 0]), ints(&[1, 0]), ints(&[1, 1])]);
        let w = seg.wedge(upper).unwrap();
        assert_eq!(w.vertices(), &[ints(&[0, 0]), ints(&[0, 1]), ints(&[1, 0])]);
        let w = square().wedge(0).unwrap();
        assert_eq!((w.ambient_dim(), w.vertex_count()), (3, 6));
        assert!(matches!(seg.wedge(5), Err(GeometryError::InvalidFacet(5))));
    }

    #[test]
    fn placement_of_square() {
        let p = square().unimodular_placement(0).unwrap();
        assert_eq!(p.direction, ints(&[1, 1]));
        assert_eq!(p.transform, IntMatrix::from_i64(&[&[1, 0], &[-1, 1]]));
        let expect = [ints(&[0, 0, -1]), ints(&[1, -1, -1]), ints(&[0, 1, -1]), ints(&[1, 0, -1])];
        assert_eq!(p.vertices, expect);

        let simplex = LatticePolytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let q = simplex.unimodular_placement(0).unwrap();
        assert_eq!(q.transform, p.transform);
    }
}
