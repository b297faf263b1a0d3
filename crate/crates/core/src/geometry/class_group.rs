use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Fan, GeometryError};
use crate::exact::{hnf, snf, IntMatrix};

/// Element of the class group in canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

/// Cokernel of the map `m -> (<m, u_rho>)_rho`, computed by Smith normal
/// form. Free coordinates are the rows of a Hermite-reduced projection;
/// torsion coordinates are residues modulo the invariant factors `> 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    ray_count: usize,
    torsion_factors: Vec<BigInt>,
    /// One row per torsion factor.
    torsion_rows: IntMatrix,
    /// `rank x ray_count`.
    free_rows: IntMatrix,
    /// Lifts `(torsion, free)` coordinates back to divisor vectors.
    lift_torsion: Vec<Vec<BigInt>>,
    lift_free: Vec<Vec<BigInt>>,
}

impl ClassGroup {
    /// Class group of the fan's rays.
    pub fn of_fan(fan: &Fan) -> Self {
        Self::from_rays(fan.ambient_dim(), fan.rays())
    }

    pub fn from_rays(ambient_dim: usize, rays: &[Vec<BigInt>]) -> Self {
        let n = rays.len();
        if n == 0 {
            return Self {
                ray_count: 0,
                torsion_factors: Vec::new(),
                torsion_rows: IntMatrix::zeros(0, 0),
                free_rows: IntMatrix::zeros(0, 0),
                lift_torsion: Vec::new(),
                lift_free: Vec::new(),
            };
        }
        let cox = if ambient_dim == 0 {
            IntMatrix::zeros(n, 1)
        } else {
            IntMatrix::from_rows(rays, ambient_dim).expect("rays share a width")
        };
        let (s, u, _) = snf(&cox);
        let diag: Vec<BigInt> = (0..s.rows().min(s.cols())).map(|i| s[(i, i)].clone()).collect();
        let k = diag.iter().take_while(|d| !d.is_zero()).count();
        let u_inv = u.unimodular_inverse().expect("snf transform is unimodular");

        let torsion_idx: Vec<usize> = (0..k).filter(|&i| !diag[i].is_one()).collect();
        let torsion_factors = torsion_idx.iter().map(|&i| diag[i].clone()).collect();
        let torsion_rows = u.select_rows(&torsion_idx);
        let lift_torsion = torsion_idx.iter().map(|&i| u_inv.column(i)).collect();

        let free_idx: Vec<usize> = (k..n).collect();
        let (free_rows, lift_free) = if free_idx.is_empty() {
            (IntMatrix::zeros(0, n), Vec::new())
        } else {
            let raw = u.select_rows(&free_idx);
            // H = W raw; lifting H-coordinates x goes through raw-coordinates W^-1 x
            let (h, w) = hnf(&raw);
            let w_inv = w.unimodular_inverse().expect("hnf transform is unimodular");
            let cols: Vec<Vec<BigInt>> = free_idx.iter().map(|&i| u_inv.column(i)).collect();
            let lift: Vec<Vec<BigInt>> = (0..free_idx.len())
                .map(|j| {
                    let mut v = vec![BigInt::zero(); n];
                    for (a, col) in cols.iter().enumerate() {
                        let c = &w_inv[(a, j)];
                        if !c.is_zero() {
                            for (x, y) in v.iter_mut().zip(col) {
                                *x += c * y;
                            }
                        }
                    }
                    v
                })
                .collect();
            (h, lift)
        };
        Self { ray_count: n, torsion_factors, torsion_rows, free_rows, lift_torsion, lift_free }
    }

    pub fn rank(&self) -> usize {
        self.free_rows.rows()
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion_factors
    }

    pub fn ray_count(&self) -> usize {
        self.ray_count
    }

    /// The free-part projection as a `rank x ray_count` matrix.
    pub fn free_projection(&self) -> &IntMatrix {
        &self.free_rows
    }

    /// Number of torsion residues, the product of the torsion factors.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion_factors.iter().product()
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass {
            free: vec![BigInt::zero(); self.rank()],
            torsion: vec![BigInt::zero(); self.torsion_factors.len()],
        }
    }

    fn reduce(&self, mut torsion: Vec<BigInt>) -> Vec<BigInt> {
        for (t, d) in torsion.iter_mut().zip(&self.torsion_factors) {
            *t = t.mod_floor(d);
        }
        torsion
    }

    /// Canonical class of the divisor `sum r_rho D_rho`.
    pub fn divisor_class(&self, r: &[BigInt]) -> Result<DivisorClass, GeometryError> {
        if r.len() != self.ray_count {
            return Err(GeometryError::LengthMismatch { expected: self.ray_count, got: r.len() });
        }
        let free = if self.rank() == 0 { Vec::new() } else { self.free_rows.mul_vec(r) };
        let torsion = if self.torsion_factors.is_empty() {
            Vec::new()
        } else {
            self.reduce(self.torsion_rows.mul_vec(r))
        };
        Ok(DivisorClass { free, torsion })
    }

    /// Class of a single `D_rho`.
    pub fn ray_class(&self, rho: usize) -> DivisorClass {
        let mut e = vec![BigInt::zero(); self.ray_count];
        e[rho] = BigInt::one();
        self.divisor_class(&e).expect("length matches")
    }

    /// A divisor vector representing the class.
    pub fn lift(&self, c: &DivisorClass) -> Result<Vec<BigInt>, GeometryError> {
        self.check(c)?;
        let mut v = vec![BigInt::zero(); self.ray_count];
        for (coef, col) in c.torsion.iter().zip(&self.lift_torsion).chain(c.free.iter().zip(&self.lift_free)) {
            if !coef.is_zero() {
                for (x, y) in v.iter_mut().zip(col) {
                    *x += coef * y;
                }
            }
        }
        Ok(v)
    }

    fn check(&self, c: &DivisorClass) -> Result<(), GeometryError> {
        if c.free.len() != self.rank() {
            return Err(GeometryError::LengthMismatch { expected: self.rank(), got: c.free.len() });
        }
        if c.torsion.len() != self.torsion_factors.len() {
            return Err(GeometryError::LengthMismatch {
                expected: self.torsion_factors.len(),
                got: c.torsion.len(),
            });
        }
        Ok(())
    }

    /// Builds a class from raw coordinates, reducing the torsion part.
    pub fn class(&self, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<DivisorClass, GeometryError> {
        let c = DivisorClass { free, torsion };
        self.check(&c)?;
        Ok(DivisorClass { torsion: self.reduce(c.torsion), free: c.free })
    }

    pub fn add(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        DivisorClass {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: self.reduce(a.torsion.iter().zip(&b.torsion).map(|(x, y)| x + y).collect()),
        }
    }

    pub fn neg(&self, a: &DivisorClass) -> DivisorClass {
        DivisorClass {
            free: a.free.iter().map(|x| -x).collect(),
            torsion: self.reduce(a.torsion.iter().map(|x| -x).collect()),
        }
    }

    pub fn sub(&self, a: &DivisorClass, b: &DivisorClass) -> DivisorClass {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &DivisorClass, k: &BigInt) -> DivisorClass {
        DivisorClass {
            free: a.free.iter().map(|x| x * k).collect(),
            torsion: self.reduce(a.torsion.iter().map(|x| x * k).collect()),
        }
    }

    /// Every torsion residue vector, in lexicographic order.
    pub fn torsion_residues(&self) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = vec![Vec::new()];
        for d in &self.torsion_factors {
            let mut next = Vec::new();
            for prefix in &out {
                let mut t = BigInt::zero();
                while &t < d {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    next.push(v);
                    t += 1;
                }
            }
            out = next;
        }
        out
    }
}
