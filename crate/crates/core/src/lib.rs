//! Exact lattice-polytope, fan and line-bundle combinatorics for certifying
//! toric non-commutative crepant resolutions of almost simplicial Gorenstein
//! cones.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: arbitrary-precision integer and rational linear algebra
//!   (Hermite and Smith normal forms, kernels, exact simplex, lattice points).
//! * [`geometry`]: lattice polytopes, cones, fans and divisor class groups.
//! * [`cohomology`]: restricted ray complexes, primitive collections,
//!   forbidden cones and line-bundle cohomology on complete simplicial fans.
//! * [`pipeline`]: the almost simplicial construction end to end, from a
//!   polytope with `dim + 2` vertices to a verifiable [`Certificate`].
//! * [`io`]: the JSON schemas for polytopes, fans and certificates.

pub mod cohomology;
pub mod exact;
pub mod fixtures;
pub mod geometry;
pub mod io;
pub mod pipeline;

pub use cohomology::{cohomology_dims, is_acyclic, Acyclicity, BettiVector, ForbiddenCones, RayVerdict};
pub use exact::{IntMatrix, LinearSystem, Rat, RatVector};
pub use geometry::{lattice_equivalent, ClassGroup, Cone, DivisorClass, Fan, GeometryError, LatticePolytope};
pub use io::IoError;
pub use pipeline::{certify, verify, Certificate, CertifyConfig, PipelineError, Verdicts, VerifyReport};

pub use num_bigint::BigInt;
