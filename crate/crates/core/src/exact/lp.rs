//! Exact two-phase simplex over the rationals with Bland's rule.

use num_traits::{Signed, Zero};

use super::rat::{Rat, RatVector};
use super::ArithError;

/// Equalities `a . x = b` and inequalities `a . x >= b` over free real
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    nvars: usize,
    pub equalities: Vec<(RatVector, Rat)>,
    pub inequalities: Vec<(RatVector, Rat)>,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, equalities: Vec::new(), inequalities: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn check(&self, coeffs: &RatVector) -> Result<(), ArithError> {
        if coeffs.len() != self.nvars {
            return Err(ArithError::Shape(format!(
                "constraint with {} coefficients in a {}-variable system",
                coeffs.len(),
                self.nvars
            )));
        }
        Ok(())
    }

    pub fn add_eq(&mut self, coeffs: RatVector, rhs: Rat) -> Result<(), ArithError> {
        self.check(&coeffs)?;
        self.equalities.push((coeffs, rhs));
        Ok(())
    }

    /// `coeffs . x >= rhs`
    pub fn add_ge(&mut self, coeffs: RatVector, rhs: Rat) -> Result<(), ArithError> {
        self.check(&coeffs)?;
        self.inequalities.push((coeffs, rhs));
        Ok(())
    }

    /// `coeffs . x <= rhs`
    pub fn add_le(&mut self, coeffs: RatVector, rhs: Rat) -> Result<(), ArithError> {
        let neg = coeffs.iter().map(|q| -q).collect();
        self.add_ge(neg, -rhs)
    }

    /// Exact check of a candidate point.
    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        let eval = |a: &RatVector| -> Rat { a.iter().zip(x).map(|(p, q)| p * q).sum() };
        self.equalities.iter().all(|(a, b)| &eval(a) == b)
            && self.inequalities.iter().all(|(a, b)| &eval(a) >= b)
    }

    /// Substitutes `x_0 = value` and drops the first variable.
    pub fn fix_first(&self, value: &Rat) -> LinearSystem {
        let shift = |(a, b): &(RatVector, Rat)| -> (RatVector, Rat) {
            (RatVector(a[1..].to_vec()), b - &a[0] * value)
        };
        LinearSystem {
            nvars: self.nvars - 1,
            equalities: self.equalities.iter().map(shift).collect(),
            inequalities: self.inequalities.iter().map(shift).collect(),
        }
    }

    /// The recession cone: right-hand sides zeroed.
    pub fn homogenized(&self) -> LinearSystem {
        let zero = |(a, _): &(RatVector, Rat)| (a.clone(), Rat::zero());
        LinearSystem {
            nvars: self.nvars,
            equalities: self.equalities.iter().map(zero).collect(),
            inequalities: self.inequalities.iter().map(zero).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(RatVector),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&RatVector> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, witness: RatVector },
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // last entry is the right-hand side
    obj: Vec<Rat>,       // reduced costs, last entry is -(objective value)
    basis: Vec<usize>,
    width: usize, // number of structural columns
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let prow = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rat>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = c;
    }

    /// Runs Bland's-rule iterations on the current objective, considering
    /// only columns `< allowed`. Returns false when unbounded.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let rhs = self.width;
            let mut best: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else { return false };
            self.pivot(r, c);
        }
    }

    fn value_of(&self, col: usize) -> Rat {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map_or_else(Rat::zero, |i| self.rows[i][self.width].clone())
    }
}

/// Builds the standard-form phase-one tableau and runs phase one.
/// Returns `None` if infeasible. Structural columns: `x+` and `x-` for each
/// variable, then one surplus per inequality.
fn phase_one(sys: &LinearSystem) -> Option<Tableau> {
    let n = sys.nvars;
    let k = sys.inequalities.len();
    let m = sys.equalities.len() + k;
    let structural = 2 * n + k;
    let width = structural + m;

    let mut rows = Vec::with_capacity(m);
    let all = sys.equalities.iter().map(|c| (c, None)).chain(
        sys.inequalities.iter().enumerate().map(|(s, c)| (c, Some(s))),
    );
    for (i, ((a, b), surplus)) in all.enumerate() {
        let mut row = vec![Rat::zero(); width + 1];
        for (j, q) in a.iter().enumerate() {
            row[2 * j] = q.clone();
            row[2 * j + 1] = -q;
        }
        if let Some(s) = surplus {
            row[2 * n + s] = Rat::from_integer((-1).into());
        }
        row[width] = b.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
        row[structural + i] = Rat::from_integer(1.into());
        rows.push(row);
    }
    let mut obj = vec![Rat::zero(); width + 1];
    for row in &rows {
        for j in 0..structural {
            obj[j] -= &row[j];
        }
        obj[width] -= &row[width];
    }
    let mut t = Tableau { rows, obj, basis: (structural..width).collect(), width };
    t.run(width);
    if !t.obj[width].is_zero() {
        return None;
    }
    // drive artificial columns out of the basis; drop redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= structural {
            match (0..structural).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    Some(t)
}

fn extract(t: &Tableau, n: usize) -> RatVector {
    (0..n).map(|j| t.value_of(2 * j) - t.value_of(2 * j + 1)).collect()
}

/// Exact feasibility test with a rational witness.
pub fn lp_feasible(sys: &LinearSystem) -> Feasibility {
    match phase_one(sys) {
        Some(t) => Feasibility::Feasible(extract(&t, sys.nvars)),
        None => Feasibility::Infeasible,
    }
}

/// Optimizes `objective . x` over the system.
pub fn lp_optimize(sys: &LinearSystem, objective: &[Rat], sense: Sense) -> LpOutcome {
    assert_eq!(objective.len(), sys.nvars, "objective length mismatch");
    let Some(mut t) = phase_one(sys) else {
        return LpOutcome::Infeasible;
    };
    let n = sys.nvars;
    let structural = 2 * n + sys.inequalities.len();
    // minimize c . y in standard columns
    let mut cost = vec![Rat::zero(); structural];
    for (j, q) in objective.iter().enumerate() {
        let q = if sense == Sense::Maximize { -q } else { q.clone() };
        cost[2 * j + 1] = -&q;
        cost[2 * j] = q;
    }
    let width = t.width;
    let mut obj = vec![Rat::zero(); width + 1];
    obj[..structural].clone_from_slice(&cost);
    for (i, &b) in t.basis.iter().enumerate() {
        let cb = cost[b].clone();
        if cb.is_zero() {
            continue;
        }
        for (o, x) in obj[..=width].iter_mut().zip(&t.rows[i][..=width]) {
            *o -= &cb * x;
        }
    }
    t.obj = obj;
    if !t.run(structural) {
        return LpOutcome::Unbounded;
    }
    let witness = extract(&t, n);
    let value = objective.iter().zip(witness.iter()).map(|(a, b)| a * b).sum();
    LpOutcome::Optimal { value, witness }
}
