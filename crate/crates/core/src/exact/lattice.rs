use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lp::{lp_feasible, lp_optimize, Feasibility, LinearSystem, LpOutcome, Sense};
use super::rat::{Rat, RatVector};
use super::ArithError;

/// Boxes up to this many points are scanned directly; larger ones are
/// split on the first coordinate.
const SCAN_LIMIT: u64 = 4096;

/// All integer points of the polyhedron described by `sys`, in
/// lexicographic order.
///
/// Fails with [`ArithError::Unbounded`] when the polyhedron is nonempty and
/// has a nonzero recession direction.
pub fn enumerate_lattice_points(sys: &LinearSystem) -> Result<Vec<Vec<BigInt>>, ArithError> {
    if !lp_feasible(sys).is_feasible() {
        return Ok(Vec::new());
    }
    if let Some(dir) = recession_direction(sys) {
        return Err(ArithError::Unbounded(dir.iter().map(|q| q.to_string()).collect()));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    enumerate_bounded(sys, &mut prefix, &mut out);
    Ok(out)
}

fn recession_direction(sys: &LinearSystem) -> Option<RatVector> {
    let cone = sys.homogenized();
    let n = sys.nvars();
    for i in 0..n {
        for sign in [1i64, -1] {
            let mut probe = cone.clone();
            let mut e = RatVector::zeros(n);
            e[i] = Rat::from_integer(sign.into());
            probe.add_ge(e, Rat::one()).expect("probe has the system width");
            if let Feasibility::Feasible(d) = lp_feasible(&probe) {
                return Some(d);
            }
        }
    }
    None
}

/// Integer range of each coordinate, or `None` if the system is empty.
fn integer_box(sys: &LinearSystem) -> Option<Vec<(BigInt, BigInt)>> {
    let n = sys.nvars();
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::one();
        let lo = match lp_optimize(sys, &e, Sense::Minimize) {
            LpOutcome::Optimal { value, .. } => value.ceil().to_integer(),
            LpOutcome::Infeasible => return None,
            LpOutcome::Unbounded => unreachable!("bounded by the recession check"),
        };
        let hi = match lp_optimize(sys, &e, Sense::Maximize) {
            LpOutcome::Optimal { value, .. } => value.floor().to_integer(),
            LpOutcome::Infeasible => return None,
            LpOutcome::Unbounded => unreachable!("bounded by the recession check"),
        };
        if lo > hi {
            return None;
        }
        bounds.push((lo, hi));
    }
    Some(bounds)
}

/// Constraint rows scaled to integers: `(a, b, is_equality)` meaning
/// `a . x = b` or `a . x >= b`.
fn integral_rows(sys: &LinearSystem) -> Vec<(Vec<BigInt>, BigInt, bool)> {
    let scale = |a: &RatVector, b: &Rat, eq: bool| {
        let d = a.iter().fold(b.denom().clone(), |acc, q| acc.lcm(q.denom()));
        let dq = Rat::from_integer(d);
        let ints = a.iter().map(|q| (q * &dq).to_integer()).collect();
        (ints, (b * &dq).to_integer(), eq)
    };
    sys.equalities
        .iter()
        .map(|(a, b)| scale(a, b, true))
        .chain(sys.inequalities.iter().map(|(a, b)| scale(a, b, false)))
        .collect()
}

fn enumerate_bounded(sys: &LinearSystem, prefix: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    if sys.nvars() == 0 {
        if sys.satisfied_by(&[]) {
            out.push(prefix.clone());
        }
        return;
    }
    let Some(bounds) = integer_box(sys) else { return };
    let volume = bounds.iter().try_fold(1u64, |acc, (lo, hi)| {
        let w: u64 = (hi - lo + BigInt::one()).try_into().ok()?;
        acc.checked_mul(w)
    });
    match volume {
        Some(v) if v <= SCAN_LIMIT => scan_box(sys, &bounds, prefix, out),
        _ => {
            let (lo, hi) = &bounds[0];
            let mut x = lo.clone();
            while &x <= hi {
                prefix.push(x.clone());
                enumerate_bounded(&sys.fix_first(&Rat::from_integer(x.clone())), prefix, out);
                prefix.pop();
                x += 1;
            }
        }
    }
}

fn scan_box(
    sys: &LinearSystem,
    bounds: &[(BigInt, BigInt)],
    prefix: &[BigInt],
    out: &mut Vec<Vec<BigInt>>,
) {
    let rows = integral_rows(sys);
    let mut point: Vec<BigInt> = bounds.iter().map(|(lo, _)| lo.clone()).collect();
    loop {
        let ok = rows.iter().all(|(a, b, eq)| {
            let lhs: BigInt = a.iter().zip(&point).filter(|(c, _)| !c.is_zero()).map(|(c, x)| c * x).sum();
            if *eq {
                &lhs == b
            } else {
                !(lhs - b).is_negative()
            }
        });
        if ok {
            let mut p = prefix.to_vec();
            p.extend(point.iter().cloned());
            out.push(p);
        }
        // odometer, last coordinate fastest
        let mut k = point.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if point[k] < bounds[k].1 {
                point[k] += 1;
                break;
            }
            point[k] = bounds[k].0.clone();
        }
    }
}
