use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{complex_restrict, nonvanishing_supports, reduced_homology, BettiVector, CohomologyError};
use crate::exact::{enumerate_lattice_points, ArithError, lp_feasible, lp_optimize, LinearSystem, LpOutcome, Rat, RatVector, Sense};
use crate::geometry::{ClassGroup, DivisorClass, Fan};

/// Region of classes with a representative that is `<= -1` on the support
/// and `>= 0` off it; apex `-sum_{rho in S} D_rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenCone {
    pub support: Vec<usize>,
    pub apex: Vec<BigInt>,
    pub betti: BettiVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic,
    Forbidden { support: Vec<usize> },
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayVerdict {
    Acyclic,
    /// The ray `c + l d` enters the cone on `support`, first at `l`.
    Forbidden { support: Vec<usize>, l: Rat },
}

impl RayVerdict {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, RayVerdict::Acyclic)
    }
}

pub fn forbidden_cone(fan: &Fan, support: &[usize]) -> Result<ForbiddenCone, CohomologyError> {
    let mut s = support.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() || s.iter().any(|&i| i >= fan.ray_count()) {
        return Err(CohomologyError::SupportNotForbidden(s));
    }
    let betti = reduced_homology(&complex_restrict(fan, &s));
    if betti.is_zero() {
        return Err(CohomologyError::SupportNotForbidden(s));
    }
    let apex = (0..fan.ray_count())
        .map(|i| if s.contains(&i) { -BigInt::one() } else { BigInt::zero() })
        .collect();
    Ok(ForbiddenCone { support: s, apex, betti })
}

/// `r + div(m) (+ l d)` has sign pattern `support`: `<= -1` on it, `>= 0`
/// elsewhere. Variables are `m`, then `l` when a direction is given.
fn sign_system(
    fan: &Fan,
    r: &[BigInt],
    support: &[usize],
    ray: Option<(&[BigInt], &Rat)>,
) -> LinearSystem {
    let d = fan.ambient_dim();
    let nvars = d + usize::from(ray.is_some());
    let mut sys = LinearSystem::new(nvars);
    for (rho, u) in fan.rays().iter().enumerate() {
        let mut row = RatVector::from_ints(u);
        if let Some((dir, _)) = ray {
            row.push(Rat::from_integer(dir[rho].clone()));
        }
        let base = Rat::from_integer(r[rho].clone());
        if support.contains(&rho) {
            sys.add_le(row, -Rat::one() - base).expect("row width");
        } else {
            sys.add_ge(row, -base).expect("row width");
        }
    }
    if let Some((_, from)) = ray {
        let mut e = RatVector::zeros(nvars);
        e[d] = Rat::one();
        sys.add_ge(e, from.clone()).expect("row width");
    }
    sys
}

/// Forbidden cones of a fan with its class group, for repeated queries.
#[derive(Clone, Debug)]
pub struct ForbiddenCones {
    fan: Fan,
    group: ClassGroup,
    cones: Vec<ForbiddenCone>,
}

impl ForbiddenCones {
    pub fn new(fan: &Fan) -> Self {
        let cones = nonvanishing_supports(fan, false)
            .into_iter()
            .map(|s| forbidden_cone(fan, &s).expect("support has homology"))
            .collect();
        Self { fan: fan.clone(), group: ClassGroup::of_fan(fan), cones }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn group(&self) -> &ClassGroup {
        &self.group
    }

    pub fn cones(&self) -> &[ForbiddenCone] {
        &self.cones
    }

    /// Real relaxation: some real character moves a representative of `c`
    /// into the cone.
    pub fn contains(&self, c: &DivisorClass, cone: &ForbiddenCone) -> Result<bool, CohomologyError> {
        let r = self.group.lift(c)?;
        Ok(lp_feasible(&sign_system(&self.fan, &r, &cone.support, None)).is_feasible())
    }

    /// Some integral representative of `c` has the cone's sign pattern.
    pub fn contains_integral(&self, c: &DivisorClass, cone: &ForbiddenCone) -> Result<bool, CohomologyError> {
        let r = self.group.lift(c)?;
        let sys = sign_system(&self.fan, &r, &cone.support, None);
        if !lp_feasible(&sys).is_feasible() {
            return Ok(false);
        }
        match enumerate_lattice_points(&sys) {
            Ok(points) => Ok(!points.is_empty()),
            // an unbounded sign region is only reported, never refined
            Err(ArithError::Unbounded(_)) => Ok(true),
            Err(e) => Err(e.into()),
        }
    }

    /// Acyclic iff no integral representative of `c` meets a forbidden
    /// cone; the real relaxation screens first.
    pub fn is_acyclic(&self, c: &DivisorClass) -> Result<Acyclicity, CohomologyError> {
        for cone in &self.cones {
            if self.contains_integral(c, cone)? {
                return Ok(Acyclicity::Forbidden { support: cone.support.clone() });
            }
        }
        Ok(Acyclicity::Acyclic)
    }

    /// Whether `c + l d` avoids every forbidden cone for all real
    /// `l >= from_l`.
    pub fn ray_acyclic(&self, c: &DivisorClass, d: &DivisorClass, from_l: &Rat) -> Result<RayVerdict, CohomologyError> {
        let r = self.group.lift(c)?;
        let dir = self.group.lift(d)?;
        let nvars = self.fan.ambient_dim() + 1;
        let mut objective = vec![Rat::zero(); nvars];
        objective[nvars - 1] = Rat::one();
        for cone in &self.cones {
            let sys = sign_system(&self.fan, &r, &cone.support, Some((&dir, from_l)));
            if let LpOutcome::Optimal { value, .. } = lp_optimize(&sys, &objective, Sense::Minimize) {
                return Ok(RayVerdict::Forbidden { support: cone.support.clone(), l: value });
            }
        }
        Ok(RayVerdict::Acyclic)
    }

    /// `dim H^i` for `i = 0..=ambient_dim` by counting characters with each
    /// sign pattern.
    pub fn cohomology_dims(&self, c: &DivisorClass) -> Result<Vec<usize>, CohomologyError> {
        let r = self.group.lift(c)?;
        let n = self.fan.ambient_dim();
        let mut dims = vec![0usize; n + 1];
        let empty = BettiVector { reduced: vec![1] };
        let supports = std::iter::once((Vec::new(), &empty))
            .chain(self.cones.iter().map(|fc| (fc.support.clone(), &fc.betti)));
        for (s, betti) in supports {
            let count = enumerate_lattice_points(&sign_system(&self.fan, &r, &s, None))?.len();
            if count == 0 {
                continue;
            }
            for (i, slot) in dims.iter_mut().enumerate() {
                *slot += count * betti.get(i as isize - 1);
            }
        }
        Ok(dims)
    }
}

pub fn class_in_forbidden(fan: &Fan, c: &DivisorClass, fc: &ForbiddenCone) -> Result<bool, CohomologyError> {
    ForbiddenCones { fan: fan.clone(), group: ClassGroup::of_fan(fan), cones: Vec::new() }.contains(c, fc)
}

pub fn is_acyclic(fan: &Fan, c: &DivisorClass) -> Result<Acyclicity, CohomologyError> {
    ForbiddenCones::new(fan).is_acyclic(c)
}

pub fn ray_acyclic(fan: &Fan, c: &DivisorClass, d: &DivisorClass, from_l: &Rat) -> Result<RayVerdict, CohomologyError> {
    ForbiddenCones::new(fan).ray_acyclic(c, d, from_l)
}

pub fn cohomology_dims(fan: &Fan, c: &DivisorClass) -> Result<Vec<usize>, CohomologyError> {
    ForbiddenCones::new(fan).cohomology_dims(c)
}
