use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PipelineError, WeightData};
use crate::exact::{enumerate_lattice_points, LinearSystem, Rat, RatVector};
use crate::geometry::{ClassGroup, DivisorClass, Fan};

/// The linear map from free class coordinates to `(f, alpha)`.
#[derive(Clone, Debug)]
pub struct PicCoords {
    group: ClassGroup,
    f_row: RatVector,
    alpha_row: RatVector,
}

/// A point `(f, alpha)`.
pub type PicPoint = (Rat, Rat);

impl PicCoords {
    pub fn new(fan: &Fan, w: &WeightData) -> Result<Self, PipelineError> {
        let group = ClassGroup::of_fan(fan);
        if group.rank() != 2 {
            return Err(PipelineError::VerificationFailed(format!(
                "class group has rank {} instead of 2",
                group.rank()
            )));
        }
        let mut f_row = RatVector::zeros(2);
        let mut alpha_row = RatVector::zeros(2);
        for j in 0..2 {
            let mut free = vec![BigInt::zero(); 2];
            free[j] = BigInt::one();
            let e = group.class(free, vec![BigInt::zero(); group.torsion().len()])?;
            let d = group.lift(&e)?;
            f_row[j] = w.f(&d);
            alpha_row[j] = w.alpha_of(&d);
        }
        let det = &f_row[0] * &alpha_row[1] - &f_row[1] * &alpha_row[0];
        if det.is_zero() {
            return Err(PipelineError::VerificationFailed("f and alpha are dependent".into()));
        }
        Ok(Self { group, f_row, alpha_row })
    }

    pub fn group(&self) -> &ClassGroup {
        &self.group
    }

    pub fn of_free(&self, free: &[BigInt]) -> PicPoint {
        (self.f_row.dot_int(free), self.alpha_row.dot_int(free))
    }

    pub fn of(&self, c: &DivisorClass) -> PicPoint {
        self.of_free(&c.free)
    }

    /// Free lattice points whose image lies in the closed box
    /// `|f - p_f| <= h`, `|alpha - p_alpha| <= h`.
    pub fn free_points_in_box(&self, p: &PicPoint, h: &Rat) -> Vec<Vec<BigInt>> {
        let mut sys = LinearSystem::new(2);
        for (row, centre) in [(&self.f_row, &p.0), (&self.alpha_row, &p.1)] {
            sys.add_ge(row.clone(), centre - h).expect("width 2");
            sys.add_le(row.clone(), centre + h).expect("width 2");
        }
        enumerate_lattice_points(&sys).expect("f and alpha are independent, so the box is bounded")
    }

    /// Every class (all torsion residues) over the given free points.
    pub fn with_torsion(&self, free: Vec<Vec<BigInt>>) -> Vec<DivisorClass> {
        let residues = self.group.torsion_residues();
        let mut out = Vec::with_capacity(free.len() * residues.len());
        for x in free {
            for t in &residues {
                out.push(DivisorClass { free: x.clone(), torsion: t.clone() });
            }
        }
        out.sort();
        out
    }

    /// All classes in the closed window `p + (1/2 + radius) * box`.
    pub fn window(&self, p: &PicPoint, radius: u32) -> Vec<DivisorClass> {
        let h = Rat::new(1.into(), 2.into()) + Rat::from_integer(radius.into());
        self.with_torsion(self.free_points_in_box(p, &h))
    }
}

fn half() -> Rat {
    Rat::new(1.into(), 2.into())
}

/// `true` iff no class image lies on the boundary of `p + Delta`.
pub fn is_generic(pic: &PicCoords, p: &PicPoint) -> bool {
    let h = half();
    pic.free_points_in_box(p, &h).iter().all(|x| {
        let (f, a) = pic.of_free(x);
        (f - &p.0).abs() != h && (a - &p.1).abs() != h
    })
}

/// Seeded rejection sampling of `p` with denominators in `[2, 1000]` and
/// coordinates in `[-1/2, 1/2]`.
pub fn choose_generic_p(pic: &PicCoords, seed: u64, rejection_cap: u64) -> Result<PicPoint, PipelineError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..rejection_cap {
        let q: i64 = rng.gen_range(2..=1000);
        let a: i64 = rng.gen_range(-(q / 2)..=q / 2);
        let b: i64 = rng.gen_range(-(q / 2)..=q / 2);
        let p = (Rat::new(a.into(), q.into()), Rat::new(b.into(), q.into()));
        if is_generic(pic, &p) {
            return Ok(p);
        }
    }
    Err(PipelineError::RejectionCapExceeded { cap: rejection_cap })
}

/// The classes strictly inside `p + Delta`, with their images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalSet {
    pub classes: Vec<DivisorClass>,
    pub coords: Vec<PicPoint>,
    pub p: PicPoint,
}

pub fn enumerate_s(pic: &PicCoords, p: &PicPoint) -> ExceptionalSet {
    let h = half();
    let inside: Vec<Vec<BigInt>> = pic
        .free_points_in_box(p, &h)
        .into_iter()
        .filter(|x| {
            let (f, a) = pic.of_free(x);
            (f - &p.0).abs() < h && (a - &p.1).abs() < h
        })
        .collect();
    let classes = pic.with_torsion(inside);
    let coords = classes.iter().map(|c| pic.of(c)).collect();
    ExceptionalSet { classes, coords, p: p.clone() }
}
