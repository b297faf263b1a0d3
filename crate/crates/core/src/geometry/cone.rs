use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GeometryError;
use crate::exact::{lp_feasible, primitive, solve_integer, IntMatrix, LinearSystem, Rat, RatVector};

/// Rational polyhedral cone given by primitive ray generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<Vec<BigInt>>,
}

impl Cone {
    pub fn new(ambient_dim: usize, rays: Vec<Vec<BigInt>>) -> Result<Self, GeometryError> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != ambient_dim {
                return Err(GeometryError::Invalid(format!("ray {i} has the wrong length")));
            }
            if r.iter().all(Zero::is_zero) || primitive(r) != *r {
                return Err(GeometryError::Invalid(format!("ray {i} is not primitive")));
            }
        }
        for (i, j) in (0..rays.len()).tuple_combinations() {
            let neg: Vec<BigInt> = rays[j].iter().map(|x| -x).collect();
            if rays[i] == rays[j] || rays[i] == neg {
                return Err(GeometryError::Invalid(format!("rays {i} and {j} are parallel")));
            }
        }
        Ok(Self { ambient_dim, rays })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rays, self.ambient_dim).expect("rays share a width")
    }

    pub fn dim(&self) -> usize {
        self.ray_matrix().rank()
    }

    /// No line through the origin lies in the cone.
    pub fn is_strongly_convex(&self) -> bool {
        self.positive_functional(&[]).is_some()
    }

    /// An integral `m` with `<m, u> = 1` for every ray `u`.
    pub fn is_gorenstein(&self) -> Option<Vec<BigInt>> {
        if self.rays.is_empty() {
            return Some(vec![BigInt::zero(); self.ambient_dim]);
        }
        let ones = vec![BigInt::one(); self.rays.len()];
        solve_integer(&self.ray_matrix(), &ones)
    }

    /// A rational `m` vanishing on `zero_on` and `>= 1` on the other rays.
    fn positive_functional(&self, zero_on: &[usize]) -> Option<RatVector> {
        let mut sys = LinearSystem::new(self.ambient_dim);
        for (i, r) in self.rays.iter().enumerate() {
            let row = RatVector::from_ints(r);
            if zero_on.contains(&i) {
                sys.add_eq(row, Rat::zero()).expect("ray width");
            } else {
                sys.add_ge(row, Rat::one()).expect("ray width");
            }
        }
        lp_feasible(&sys).witness().cloned()
    }

    /// Integral `m` in the dual cone with `<m, u> = 0` exactly on the given
    /// rays and `> 0` on all others. The improper face gets `m = 0`.
    pub fn face_supporting_character(&self, face_rays: &[usize]) -> Result<Vec<BigInt>, GeometryError> {
        if let Some(&bad) = face_rays.iter().find(|&&i| i >= self.rays.len()) {
            return Err(GeometryError::InvalidRay(bad));
        }
        if (0..self.rays.len()).all(|i| face_rays.contains(&i)) {
            return Ok(vec![BigInt::zero(); self.ambient_dim]);
        }
        let m = self.positive_functional(face_rays).ok_or(GeometryError::NotAFace)?;
        Ok(primitive(&m.clear_denominators()))
    }
}
