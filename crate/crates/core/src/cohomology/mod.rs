//! Line-bundle cohomology on complete simplicial fans through restricted
//! ray complexes and forbidden cones.

mod complex;
mod forbidden;

pub use complex::{complex_restrict, nonvanishing_supports, primitive_collections, reduced_homology, BettiVector, RaySubcomplex};
pub use forbidden::{
    class_in_forbidden, cohomology_dims, forbidden_cone, is_acyclic, ray_acyclic, Acyclicity, ForbiddenCone,
    ForbiddenCones, RayVerdict,
};

use thiserror::Error;

use crate::exact::ArithError;
use crate::geometry::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("support {0:?} has vanishing reduced homology")]
    SupportNotForbidden(Vec<usize>),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
