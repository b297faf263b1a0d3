//! Lattice polytopes, cones and fans.

mod class_group;
mod cone;
mod equivalence;
mod fan;
mod polytope;

pub use class_group::{ClassGroup, DivisorClass};
pub use cone::Cone;
pub use equivalence::{lattice_equivalent, AffineMap, DEFAULT_VERTEX_CAP};
pub use fan::{Fan, FanReport};
pub use polytope::{Facet, LatticePolytope, Placement};


use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("polytope has dimension {dim} in ambient dimension {ambient}")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("the origin is not in the interior of the polytope")]
    OriginNotInterior,
    #[error("no facet with index {0}")]
    InvalidFacet(usize),
    #[error("no vertex with index {0}")]
    InvalidVertex(usize),
    #[error("no ray with index {0}")]
    InvalidRay(usize),
    #[error("no maximal cone with index {0}")]
    InvalidCone(usize),
    #[error("the given rays do not span a face of the cone")]
    NotAFace,
    #[error("maximal cone {0} is not simplicial and full-dimensional")]
    NotSimplicial(usize),
    #[error("{count} vertices exceed the cap of {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
