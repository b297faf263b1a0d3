use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::PipelineError;
use crate::geometry::{lattice_equivalent, AffineMap, ClassGroup, DivisorClass, LatticePolytope};

/// Classes of the stack pushed to the face cone `Cone(F x {1})`.
#[derive(Clone, Debug)]
pub struct Descent {
    /// Indices of the face vertices among the vertices of `Q`.
    pub face: Vec<usize>,
    /// The face with its height coordinate dropped.
    pub face_polytope: LatticePolytope,
    /// Unimodular map carrying the input polytope onto the face.
    pub equivalence: AffineMap,
    pub face_group: ClassGroup,
    /// `Cl(Cone(Q x {1}))`.
    pub cone_group: ClassGroup,
    pub classes: Vec<DivisorClass>,
}

/// Rays `(x, 1)` over the given points.
pub fn cone_rays(points: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    points
        .iter()
        .map(|v| {
            let mut r = v.clone();
            r.push(BigInt::one());
            r
        })
        .collect()
}

/// Restricts a divisor vector on the rays of `Sigma` to the face rays and
/// projects it to the face cone's class group.
pub fn descend_vector(face_group: &ClassGroup, face: &[usize], r: &[BigInt]) -> DivisorClass {
    let restricted: Vec<BigInt> = face.iter().map(|&i| r[i].clone()).collect();
    face_group.divisor_class(&restricted).expect("face length matches")
}

pub fn descend_classes(
    p: &LatticePolytope,
    q: &LatticePolytope,
    sigma_group: &ClassGroup,
    s: &[DivisorClass],
    face: &[usize],
    vertex_cap: usize,
) -> Result<Descent, PipelineError> {
    let n = p.ambient_dim();
    if q.ambient_dim() != n + 1 || face.iter().any(|&i| i >= q.vertex_count()) {
        return Err(PipelineError::FaceMismatch("face indices do not fit Q".into()));
    }
    let facets = q.facets()?;
    let mut sorted = face.to_vec();
    sorted.sort_unstable();
    let facet = facets
        .iter()
        .find(|f| f.vertices == sorted)
        .ok_or_else(|| PipelineError::FaceMismatch("the vertex set is not a facet of Q".into()))?;
    let height = -BigInt::one();
    let flat = face.iter().all(|&i| q.vertices()[i][n] == height)
        && facet.normal[..n].iter().all(Zero::is_zero);
    if !flat {
        return Err(PipelineError::FaceMismatch("the facet does not lie at height -1".into()));
    }
    let dropped: Vec<Vec<BigInt>> = face.iter().map(|&i| q.vertices()[i][..n].to_vec()).collect();
    let face_polytope = LatticePolytope::new(n, dropped)?;
    let equivalence = lattice_equivalent(p, &face_polytope, vertex_cap)?
        .ok_or_else(|| PipelineError::FaceMismatch("the facet is not lattice equivalent to P".into()))?;

    let face_group = ClassGroup::from_rays(n + 1, &cone_rays(face_polytope.vertices()));
    let cone_group = ClassGroup::from_rays(n + 2, &cone_rays(q.vertices()));
    let classes = s
        .iter()
        .map(|c| Ok(descend_vector(&face_group, face, &sigma_group.lift(c)?)))
        .collect::<Result<Vec<_>, PipelineError>>()?;
    Ok(Descent { face: face.to_vec(), face_polytope, equivalence, face_group, cone_group, classes })
}
