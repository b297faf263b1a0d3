use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::One;

use super::collection::{PicCoords, PicPoint};
use super::PipelineError;
use crate::cohomology::{primitive_collections, Acyclicity, ForbiddenCones, RayVerdict};
use crate::exact::Rat;
use crate::geometry::{ClassGroup, DivisorClass, Fan};

/// An ordered pair whose difference `second - first` meets a forbidden
/// cone (at parameter `l` for the ray test).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub first: DivisorClass,
    pub second: DivisorClass,
    pub support: Vec<usize>,
    pub l: Option<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairVerdict {
    Pass,
    Fail(PairWitness),
}

impl PairVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, PairVerdict::Pass)
    }
}

/// Distinct differences `c2 - c1` over ordered pairs, each with the first
/// pair producing it.
fn differences(group: &ClassGroup, s: &[DivisorClass]) -> BTreeMap<DivisorClass, (usize, usize)> {
    let mut out = BTreeMap::new();
    for (i, a) in s.iter().enumerate() {
        for (j, b) in s.iter().enumerate() {
            out.entry(group.sub(b, a)).or_insert((i, j));
        }
    }
    out
}

/// Every difference of two members is acyclic.
pub fn check_strong_exceptional(cones: &ForbiddenCones, s: &[DivisorClass]) -> Result<PairVerdict, PipelineError> {
    for (diff, (i, j)) in differences(cones.group(), s) {
        if let Acyclicity::Forbidden { support } = cones.is_acyclic(&diff)? {
            return Ok(PairVerdict::Fail(PairWitness {
                first: s[i].clone(),
                second: s[j].clone(),
                support,
                l: None,
            }));
        }
    }
    Ok(PairVerdict::Pass)
}

/// Class of `sum_rho D_rho`.
pub fn anticanonical(group: &ClassGroup) -> DivisorClass {
    group.divisor_class(&vec![BigInt::one(); group.ray_count()]).expect("length matches")
}

/// Every difference stays acyclic along `direction` from `l = 1` on.
pub fn check_tilting_vanishing(
    cones: &ForbiddenCones,
    s: &[DivisorClass],
    direction: &DivisorClass,
) -> Result<PairVerdict, PipelineError> {
    for (diff, (i, j)) in differences(cones.group(), s) {
        if let RayVerdict::Forbidden { support, l } = cones.ray_acyclic(&diff, direction, &Rat::one())? {
            return Ok(PairVerdict::Fail(PairWitness {
                first: s[i].clone(),
                second: s[j].clone(),
                support,
                l: Some(l),
            }));
        }
    }
    Ok(PairVerdict::Pass)
}

/// `|S|` against the sum of maximal-cone multiplicities.
pub fn check_k0_rank(fan: &Fan, s: &[DivisorClass]) -> Result<(bool, BigInt), PipelineError> {
    let total = fan.total_multiplicity()?;
    Ok((BigInt::from(s.len()) == total, total))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulReport {
    pub passed: bool,
    /// Classes reached inside the judged window.
    pub reached: usize,
    /// Classes of the judged window.
    pub window: usize,
}

/// Saturates `S` under the primitive-collection Koszul rule inside the
/// window of radius `radius + 1` and checks that the window of radius
/// `radius` is covered.
pub fn koszul_window_check(
    fan: &Fan,
    pic: &PicCoords,
    s: &[DivisorClass],
    p: &PicPoint,
    radius: u32,
) -> KoszulReport {
    let group = pic.group();
    let universe: HashSet<DivisorClass> = pic.window(p, radius + 1).into_iter().collect();
    let mut known: HashSet<DivisorClass> = s.iter().filter(|c| universe.contains(*c)).cloned().collect();
    let rays: Vec<DivisorClass> = (0..fan.ray_count()).map(|i| group.ray_class(i)).collect();

    // for each primitive collection, the classes D_J of its subsets J
    let families: Vec<Vec<DivisorClass>> = primitive_collections(fan)
        .iter()
        .map(|pc| {
            (0u32..(1 << pc.len()))
                .map(|mask| {
                    pc.iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .fold(group.zero(), |acc, (_, &rho)| group.add(&acc, &rays[rho]))
                })
                .collect()
        })
        .collect();
    let tops: Vec<Vec<DivisorClass>> = families
        .iter()
        .map(|sums| {
            let set: HashSet<DivisorClass> =
                universe.iter().flat_map(|w| sums.iter().map(move |d| group.add(w, d))).collect();
            let mut v: Vec<DivisorClass> = set.into_iter().collect();
            v.sort();
            v
        })
        .collect();

    loop {
        let mut added = false;
        for (sums, tops) in families.iter().zip(&tops) {
            for top in tops {
                let mut missing = None;
                let mut count = 0;
                for d in sums {
                    let member = group.sub(top, d);
                    if !known.contains(&member) {
                        count += 1;
                        if count > 1 {
                            break;
                        }
                        missing = Some(member);
                    }
                }
                if count == 1 {
                    let m = missing.expect("one missing member");
                    if universe.contains(&m) {
                        known.insert(m);
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    let judged = pic.window(p, radius);
    let reached = judged.iter().filter(|c| known.contains(*c)).count();
    KoszulReport { passed: reached == judged.len(), reached, window: judged.len() }
}
