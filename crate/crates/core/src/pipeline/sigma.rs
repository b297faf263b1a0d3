use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::PipelineError;
use crate::cohomology::primitive_collections;
use crate::exact::{kernel_basis, lp_optimize, IntMatrix, LinearSystem, LpOutcome, Rat, RatVector, Sense};
use crate::geometry::Fan;

/// The `2n + 2` maximal cones on rays `v_1, ..., v_{n+3}` (0-based).
pub fn sigma_cones(n: usize) -> Vec<Vec<usize>> {
    let mid: Vec<usize> = (2..n + 2).collect();
    let mut cones = Vec::with_capacity(2 * n + 2);
    for first in [0usize, 1] {
        let mut c = vec![first];
        c.extend(&mid);
        cones.push(c);
    }
    for first in [0usize, 1] {
        for skip in 2..n + 2 {
            let mut c = vec![first];
            c.extend(mid.iter().copied().filter(|&i| i != skip));
            c.push(n + 2);
            cones.push(c);
        }
    }
    cones
}

/// `I_+ = {rho_1, rho_2}` and its complement.
pub fn expected_primitive_collections(n: usize) -> Vec<Vec<usize>> {
    let mut pcs = vec![vec![0, 1], (2..n + 3).collect()];
    pcs.sort();
    pcs
}

/// Simplicial subdivision of the face fan of `Q`; fails unless it is a
/// complete simplicial fan in which `{rho_3, ..., rho_{n+3}}` spans no cone.
pub fn build_sigma(q_vertices: &[Vec<BigInt>]) -> Result<Fan, PipelineError> {
    let n = q_vertices.len() - 3;
    let fan = Fan::new(n + 1, q_vertices.to_vec(), sigma_cones(n))
        .map_err(|e| PipelineError::FanVerificationFailed(e.to_string()))?;
    let report = fan.verify();
    if !report.all() {
        return Err(PipelineError::FanVerificationFailed(format!("{report:?}")));
    }
    let rest: Vec<usize> = (2..n + 3).collect();
    if fan.spans_cone(&rest) {
        return Err(PipelineError::FanVerificationFailed("rho_3..rho_{n+3} span a cone".into()));
    }
    let pcs = primitive_collections(&fan);
    if pcs != expected_primitive_collections(n) {
        return Err(PipelineError::FanVerificationFailed(format!(
            "primitive collections {pcs:?} instead of the two expected"
        )));
    }
    Ok(fan)
}

/// The relation weights `r` and `alpha` of the rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub r: RatVector,
    pub alpha: RatVector,
}

/// The exact identities the weights must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchors {
    /// `f(-sum D_rho)`, expected `-1`.
    pub f_q_all: Rat,
    /// `alpha(-sum_{I_-} D_rho)`, expected `1`.
    pub alpha_q_minus: Rat,
    /// `alpha(-sum_{I_+} D_rho)`, expected `-1`.
    pub alpha_q_plus: Rat,
    /// `f(pi_+) - f(mu_-)`, expected `1/2`.
    pub f_pi_plus_minus_f_mu_minus: Rat,
}

impl Anchors {
    pub fn hold(&self) -> bool {
        self.f_q_all == -Rat::one()
            && self.alpha_q_minus.is_one()
            && self.alpha_q_plus == -Rat::one()
            && self.f_pi_plus_minus_f_mu_minus == Rat::new(1.into(), 2.into())
    }
}

fn weighted(w: &RatVector, d: &[BigInt]) -> Rat {
    w.dot_int(d)
}

impl WeightData {
    /// `f` of a divisor vector.
    pub fn f(&self, d: &[BigInt]) -> Rat {
        weighted(&self.r, d)
    }

    /// `alpha` of a divisor vector.
    pub fn alpha_of(&self, d: &[BigInt]) -> Rat {
        weighted(&self.alpha, d)
    }

    pub fn anchors(&self) -> Anchors {
        let m = self.r.len();
        let indicator = |set: &dyn Fn(usize) -> bool, scale: i64| -> Vec<BigInt> {
            (0..m).map(|i| if set(i) { BigInt::from(scale) } else { BigInt::zero() }).collect()
        };
        let all = |_: usize| true;
        let plus = |i: usize| i < 2;
        let minus = |i: usize| i >= 2;
        let half = Rat::new(1.into(), 2.into());
        let f_pi_plus = self.f(&indicator(&plus, 1)) * &half;
        let f_mu_minus = self.f(&indicator(&minus, -1)) * &half;
        Anchors {
            f_q_all: self.f(&indicator(&all, -1)),
            alpha_q_minus: self.alpha_of(&indicator(&minus, -1)),
            alpha_q_plus: self.alpha_of(&indicator(&plus, -1)),
            f_pi_plus_minus_f_mu_minus: f_pi_plus - f_mu_minus,
        }
    }

    /// Relations, positivity, normalization, sign pattern and anchors.
    pub fn check(&self, fan: &Fan) -> Result<(), String> {
        let rays = fan.rays();
        let m = rays.len();
        if self.r.len() != m || self.alpha.len() != m {
            return Err("weight vectors have the wrong length".into());
        }
        for (name, w) in [("r", &self.r), ("alpha", &self.alpha)] {
            for c in 0..fan.ambient_dim() {
                let s: Rat = w.iter().zip(rays).map(|(wi, r)| wi * Rat::from_integer(r[c].clone())).sum();
                if !s.is_zero() {
                    return Err(format!("{name} is not a linear relation"));
                }
            }
        }
        if self.r.iter().any(|x| !x.is_positive()) || self.r.iter().sum::<Rat>() != Rat::one() {
            return Err("r is not a positive relation of total weight one".into());
        }
        if !self.alpha.iter().sum::<Rat>().is_zero() || &self.alpha[0] + &self.alpha[1] != Rat::one() {
            return Err("alpha is not normalized".into());
        }
        let pattern = self.alpha[0].is_positive()
            && self.alpha[1].is_positive()
            && self.alpha[2..m - 1].iter().all(|x| x.is_negative())
            && self.alpha[m - 1].is_zero();
        if !pattern {
            return Err(format!("alpha sign pattern fails: {:?}", self.alpha));
        }
        if !self.anchors().hold() {
            return Err("weight anchors fail".into());
        }
        Ok(())
    }
}

fn relation_system(rays: &[Vec<BigInt>], dim: usize) -> LinearSystem {
    let m = rays.len();
    let mut sys = LinearSystem::new(m);
    for c in 0..dim {
        let row = rays.iter().map(|v| Rat::from_integer(v[c].clone())).collect();
        sys.add_eq(row, Rat::zero()).expect("width m");
    }
    sys.add_eq(RatVector(vec![Rat::one(); m]), Rat::one()).expect("width m");
    sys
}

/// `r`: the relation with the largest minimum entry, ties broken by
/// lexicographic minimization; `alpha`: the relation with zero sum,
/// normalized by `alpha_1 + alpha_2 = 1`.
pub fn weights(fan: &Fan) -> Result<WeightData, PipelineError> {
    let rays = fan.rays();
    let m = rays.len();
    let d = fan.ambient_dim();

    // maximize t subject to r_i >= t
    let base = relation_system(rays, d);
    let mut with_t = LinearSystem::new(m + 1);
    for (a, b) in &base.equalities {
        let mut row = a.clone();
        row.push(Rat::zero());
        with_t.add_eq(row, b.clone()).expect("width m + 1");
    }
    for i in 0..m {
        let mut row = RatVector::zeros(m + 1);
        row[i] = Rat::one();
        row[m] = -Rat::one();
        with_t.add_ge(row, Rat::zero()).expect("width m + 1");
    }
    let mut objective = vec![Rat::zero(); m + 1];
    objective[m] = Rat::one();
    let t = match lp_optimize(&with_t, &objective, Sense::Maximize) {
        LpOutcome::Optimal { value, .. } if value.is_positive() => value,
        _ => return Err(PipelineError::SignPatternFailed("no positive relation among the rays".into())),
    };
    let mut sys = base;
    for i in 0..m {
        let mut e = RatVector::zeros(m);
        e[i] = Rat::one();
        sys.add_ge(e, t.clone()).expect("width m");
    }
    let mut r = RatVector::zeros(m);
    for i in 0..m {
        let mut obj = vec![Rat::zero(); m];
        obj[i] = Rat::one();
        let LpOutcome::Optimal { value, .. } = lp_optimize(&sys, &obj, Sense::Minimize) else {
            unreachable!("the optimal face is nonempty and bounded");
        };
        let mut e = RatVector::zeros(m);
        e[i] = Rat::one();
        sys.add_eq(e, value.clone()).expect("width m");
        r[i] = value;
    }

    let mut rows: Vec<Vec<BigInt>> = (0..d).map(|c| rays.iter().map(|v| v[c].clone()).collect()).collect();
    rows.push(vec![BigInt::one(); m]);
    let kernel = kernel_basis(&IntMatrix::from_rows(&rows, m).expect("width m"));
    if kernel.len() != 1 {
        return Err(PipelineError::SignPatternFailed(format!(
            "zero-sum relations form a space of dimension {}",
            kernel.len()
        )));
    }
    let raw = &kernel[0];
    let norm = &raw[0] + &raw[1];
    if norm.is_zero() {
        return Err(PipelineError::SignPatternFailed("alpha_1 + alpha_2 vanishes".into()));
    }
    let alpha: RatVector = raw.iter().map(|x| Rat::new(x.clone(), norm.clone())).collect();
    let w = WeightData { r, alpha };
    w.check(fan).map_err(PipelineError::SignPatternFailed)?;
    Ok(w)
}
