//! Exact integer and rational linear algebra.
//!
//! Everything here works over [`BigInt`] and [`Rat`]; no operation rounds.
//! Pivot choices are deterministic (smallest magnitude, ties broken by the
//! lowest index) so that normal forms and LP witnesses are reproducible.

mod int;
mod lattice;
mod lp;
mod rat;

pub use int::{hnf, kernel_basis, snf, solve_integer, IntMatrix};
pub use lattice::enumerate_lattice_points;
pub use lp::{lp_feasible, lp_optimize, Feasibility, LinearSystem, LpOutcome, Sense};
pub use rat::{
    affine_rank, dot_int, ints, dot_rat, parse_rat, primitive, rat, rat_to_string, rational_rank,
    solve_rational, Rat, RatVector,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("solution polyhedron is unbounded (recession direction {0:?})")]
    Unbounded(Vec<String>),
    #[error("shape mismatch: {0}")]
    Shape(String),
}
