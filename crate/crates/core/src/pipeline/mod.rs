//! The almost simplicial construction: from a lattice polytope with
//! `dim + 2` vertices to the auxiliary polytope `Q`, the simplicial fan
//! `Sigma`, a collection of line-bundle classes and its verification.

mod certify;
mod checks;
mod collection;
mod descent;
mod placement;
mod sigma;

pub use certify::{certify, evaluate, oracle_agrees, verify, Certificate, CertifyConfig, Evaluation, Verdicts, VerifyReport};
pub use checks::{
    anticanonical, check_k0_rank, check_strong_exceptional, check_tilting_vanishing, koszul_window_check,
    KoszulReport, PairVerdict, PairWitness,
};
pub use collection::{choose_generic_p, enumerate_s, is_generic, ExceptionalSet, PicCoords, PicPoint};
pub use descent::{cone_rays, descend_classes, descend_vector, Descent};
pub use placement::{
    apex, build_q, construct_q, expected_q_facets, find_k0, place, radon_pair, same_side, PlacementData,
    QConstruction, RadonPair,
};
pub use sigma::{build_sigma, expected_primitive_collections, sigma_cones, weights, Anchors, WeightData};

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::exact::ArithError;
use crate::geometry::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("expected {expected} vertices, got {got}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("the polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("{count} vertices exceed the vertex cap {cap}")]
    VertexCapExceeded { count: usize, cap: usize },
    #[error("no pair of vertices is strictly separated through the relative interior of the others")]
    NoRadonPair,
    #[error("no k0 <= {cap} puts the origin and v1 on the same side")]
    K0CapExceeded { cap: u64 },
    #[error("no placement candidate passed verification: {0}")]
    VerificationFailed(String),
    #[error("fan verification failed: {0}")]
    FanVerificationFailed(String),
    #[error("weight verification failed: {0}")]
    SignPatternFailed(String),
    #[error("no generic offset found within {cap} samples")]
    RejectionCapExceeded { cap: u64 },
    #[error("face mismatch: {0}")]
    FaceMismatch(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

impl PipelineError {
    /// 2 for failed verification, 3 for exhausted searches, 4 for invalid
    /// input.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::WrongVertexCount { .. }
            | PipelineError::NotFullDimensional
            | PipelineError::VertexCapExceeded { .. }
            | PipelineError::Geometry(_) => 4,
            PipelineError::NoRadonPair
            | PipelineError::K0CapExceeded { .. }
            | PipelineError::VerificationFailed(_)
            | PipelineError::RejectionCapExceeded { .. } => 3,
            PipelineError::FanVerificationFailed(_)
            | PipelineError::SignPatternFailed(_)
            | PipelineError::FaceMismatch(_)
            | PipelineError::Cohomology(_)
            | PipelineError::Arith(_) => 2,
        }
    }
}
