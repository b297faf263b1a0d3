//! Small polytopes and fans used by tests, benches and the CLI.

use crate::exact::ints;
use crate::geometry::{Fan, LatticePolytope};

/// The unit square.
pub fn square() -> LatticePolytope {
    LatticePolytope::from_i64(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).expect("valid")
}

/// A lattice quadrilateral whose associated stack has torsion on the face.
pub fn quad() -> LatticePolytope {
    LatticePolytope::from_i64(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 2]]).expect("valid")
}

/// `conv{0, e1, e2, e3, (1,1,1)}`.
pub fn bipyramid() -> LatticePolytope {
    LatticePolytope::from_i64(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).expect("valid")
}

/// A square pyramid, which has five vertices but no Radon pair of the
/// required shape.
pub fn pyramid() -> LatticePolytope {
    LatticePolytope::from_i64(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).expect("valid")
}

/// The reflexive triangle `conv{e1, e2, -e1-e2}`.
pub fn reflexive_triangle() -> LatticePolytope {
    LatticePolytope::from_i64(2, &[&[1, 0], &[0, 1], &[-1, -1]]).expect("valid")
}

/// The fan of the projective plane.
pub fn projective_plane() -> Fan {
    Fan::new(2, vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, -1])], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
        .expect("valid")
}

/// The fan of the product of two projective lines.
pub fn product_of_lines() -> Fan {
    Fan::new(
        2,
        vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, 0]), ints(&[0, -1])],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
    )
    .expect("valid")
}

/// The fan of the first Hirzebruch surface.
pub fn hirzebruch_one() -> Fan {
    Fan::new(
        2,
        vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, 1]), ints(&[0, -1])],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
    )
    .expect("valid")
}

/// The fan of projective 3-space.
pub fn projective_space_three() -> Fan {
    Fan::new(
        3,
        vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1]), ints(&[-1, -1, -1])],
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    )
    .expect("valid")
}

/// The weighted projective plane `P(1,1,2)`, which has a non-smooth cone.
pub fn weighted_plane() -> Fan {
    Fan::new(2, vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, -2])], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
        .expect("valid")
}
