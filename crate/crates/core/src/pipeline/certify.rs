use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::checks::{
    anticanonical, check_k0_rank, check_strong_exceptional, check_tilting_vanishing, koszul_window_check, PairVerdict,
};
use super::collection::{choose_generic_p, enumerate_s, is_generic, PicCoords, PicPoint};
use super::descent::descend_classes;
use super::placement::{construct_q, PlacementData};
use super::sigma::{build_sigma, expected_primitive_collections, sigma_cones, weights, WeightData};
use super::PipelineError;
use crate::cohomology::{primitive_collections, ForbiddenCones};
use crate::geometry::{DivisorClass, Fan, LatticePolytope, DEFAULT_VERTEX_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub seed: u64,
    pub k0_cap: u64,
    pub rejection_cap: u64,
    pub koszul_radius: u32,
    pub vertex_cap: usize,
    /// Interior directions tried per labelled Radon pair.
    pub direction_limit: usize,
    /// Cross-check every acyclicity verdict against lattice-point counts.
    pub oracle: bool,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            k0_cap: 10_000,
            rejection_cap: 1_000,
            koszul_radius: 1,
            vertex_cap: DEFAULT_VERTEX_CAP,
            direction_limit: 8,
            oracle: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub fan_ok: bool,
    pub primitive_collections_ok: bool,
    pub weights_ok: bool,
    pub strong_exceptional_ok: bool,
    pub k0_rank_ok: bool,
    pub koszul_window_ok: bool,
    pub tilting_vanishing_ok: bool,
}

impl Verdicts {
    pub fn all(&self) -> bool {
        self.fan_ok
            && self.primitive_collections_ok
            && self.weights_ok
            && self.strong_exceptional_ok
            && self.k0_rank_ok
            && self.koszul_window_ok
            && self.tilting_vanishing_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub input: LatticePolytope,
    pub placement: PlacementData,
    pub k0: u64,
    pub q: LatticePolytope,
    pub sigma: Fan,
    pub weights: WeightData,
    pub p: PicPoint,
    pub collection: Vec<DivisorClass>,
    pub verdicts: Verdicts,
    pub multiplicity_total: BigInt,
    pub descended: Vec<DivisorClass>,
    /// `(rank, torsion)` of the face cone's class group.
    pub face_class_group: (usize, Vec<BigInt>),
    /// `Some(agreement)` when the lattice-count oracle ran.
    pub oracle: Option<bool>,
    pub failures: Vec<String>,
    pub seed: u64,
    pub certified: bool,
    pub config: CertifyConfig,
}

/// Verdicts recomputed from the stored objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub verdicts: Verdicts,
    pub multiplicity_total: BigInt,
    pub failures: Vec<String>,
}

fn fan_failure(q: &LatticePolytope, sigma: &Fan) -> Option<String> {
    let n = q.ambient_dim().checked_sub(1)?;
    if sigma.rays() != q.vertices() {
        return Some("the rays of Sigma are not the vertices of Q".into());
    }
    if sigma.max_cones() != sigma_cones(n).as_slice() {
        return Some("Sigma does not have the expected 2n+2 maximal cones".into());
    }
    let report = sigma.verify();
    if !report.all() {
        return Some(format!("fan verification failed: {report:?}"));
    }
    let rest: Vec<usize> = (2..n + 3).collect();
    if sigma.spans_cone(&rest) {
        return Some("rho_3..rho_{n+3} span a cone".into());
    }
    None
}

/// Recomputes all seven verdicts from `Q`, `Sigma`, the weights, `p` and
/// the collection.
pub fn evaluate(
    q: &LatticePolytope,
    sigma: &Fan,
    w: &WeightData,
    p: &PicPoint,
    s: &[DivisorClass],
    koszul_radius: u32,
) -> Result<Evaluation, PipelineError> {
    let mut failures = Vec::new();
    let mut v = Verdicts::default();
    let n = sigma.ambient_dim().saturating_sub(1);

    match fan_failure(q, sigma) {
        None => v.fan_ok = true,
        Some(f) => failures.push(f),
    }
    v.primitive_collections_ok = primitive_collections(sigma) == expected_primitive_collections(n);
    if !v.primitive_collections_ok {
        failures.push("Sigma does not have exactly the two expected primitive collections".into());
    }
    match w.check(sigma) {
        Ok(()) => v.weights_ok = true,
        Err(f) => failures.push(f),
    }

    let pic = PicCoords::new(sigma, w)?;
    let group = pic.group();
    for c in s {
        if group.class(c.free.clone(), c.torsion.clone()).ok().as_ref() != Some(c) {
            return Err(PipelineError::VerificationFailed(format!("malformed class {c:?}")));
        }
    }
    if !is_generic(&pic, p) {
        failures.push("a class lies on the boundary of p + Delta".into());
    }
    let cones = ForbiddenCones::new(sigma);
    match check_strong_exceptional(&cones, s)? {
        PairVerdict::Pass => v.strong_exceptional_ok = true,
        PairVerdict::Fail(wit) => failures.push(format!("strong exceptionality fails: {wit:?}")),
    }
    let (rank_ok, total) = check_k0_rank(sigma, s)?;
    v.k0_rank_ok = rank_ok;
    if !rank_ok {
        failures.push(format!("|S| = {} but the multiplicities sum to {total}", s.len()));
    }
    let koszul = koszul_window_check(sigma, &pic, s, p, koszul_radius);
    v.koszul_window_ok = koszul.passed;
    if !koszul.passed {
        failures.push(format!("Koszul saturation reached {} of {} classes", koszul.reached, koszul.window));
    }
    match check_tilting_vanishing(&cones, s, &anticanonical(group))? {
        PairVerdict::Pass => v.tilting_vanishing_ok = true,
        PairVerdict::Fail(wit) => failures.push(format!("tilting vanishing fails: {wit:?}")),
    }
    Ok(Evaluation { verdicts: v, multiplicity_total: total, failures })
}

/// Whether `is_acyclic` agrees with vanishing of the counted higher
/// cohomology on every pairwise difference.
pub fn oracle_agrees(sigma: &Fan, s: &[DivisorClass]) -> Result<bool, PipelineError> {
    let cones = ForbiddenCones::new(sigma);
    let group = cones.group();
    for a in s {
        for b in s {
            let d = group.sub(b, a);
            let dims = cones.cohomology_dims(&d)?;
            let vanishes = dims[1..].iter().all(|&x| x == 0);
            if vanishes != cones.is_acyclic(&d)?.is_acyclic() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Runs the whole construction on `P`.
pub fn certify(p: &LatticePolytope, config: &CertifyConfig) -> Result<Certificate, PipelineError> {
    if p.vertex_count() > config.vertex_cap {
        return Err(PipelineError::VertexCapExceeded { count: p.vertex_count(), cap: config.vertex_cap });
    }
    let n = p.ambient_dim();
    if !p.is_full_dimensional() {
        return Err(PipelineError::NotFullDimensional);
    }
    if p.vertex_count() != n + 2 {
        return Err(PipelineError::WrongVertexCount { expected: n + 2, got: p.vertex_count() });
    }
    let (placement, qc) = construct_q(p, config.k0_cap, config.direction_limit)?;
    let sigma = build_sigma(qc.q.vertices())?;
    let w = weights(&sigma)?;
    let pic = PicCoords::new(&sigma, &w)?;
    let offset = choose_generic_p(&pic, config.seed, config.rejection_cap)?;
    let s = enumerate_s(&pic, &offset);
    let eval = evaluate(&qc.q, &sigma, &w, &offset, &s.classes, config.koszul_radius)?;

    let face: Vec<usize> = (0..n + 2).collect();
    let descent = descend_classes(p, &qc.q, pic.group(), &s.classes, &face, config.vertex_cap)?;
    let oracle = if config.oracle { Some(oracle_agrees(&sigma, &s.classes)?) } else { None };
    let mut failures = eval.failures;
    if oracle == Some(false) {
        failures.push("forbidden-cone verdicts disagree with lattice-point counts".into());
    }
    let certified = eval.verdicts.all() && oracle != Some(false);
    Ok(Certificate {
        input: p.clone(),
        placement,
        k0: qc.k0,
        q: qc.q,
        sigma,
        weights: w,
        p: offset,
        collection: s.classes,
        verdicts: eval.verdicts,
        multiplicity_total: eval.multiplicity_total,
        descended: descent.classes,
        face_class_group: (descent.face_group.rank(), descent.face_group.torsion().to_vec()),
        oracle,
        failures,
        seed: config.seed,
        certified,
        config: config.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// Verdicts recomputed from the stored data.
    pub recomputed: Verdicts,
    /// Stored verdicts equal the recomputed ones.
    pub verdicts_match: bool,
    /// A fresh run with the stored input, configuration and seed produces
    /// the stored certificate.
    pub reproduced: bool,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.recomputed.all() && self.verdicts_match && self.reproduced
    }
}

/// Rechecks a stored certificate.
pub fn verify(cert: &Certificate) -> VerifyReport {
    let mut failures = Vec::new();
    let recomputed = match evaluate(&cert.q, &cert.sigma, &cert.weights, &cert.p, &cert.collection, cert.config.koszul_radius)
    {
        Ok(e) => {
            failures.extend(e.failures);
            e.verdicts
        }
        Err(e) => {
            failures.push(e.to_string());
            Verdicts::default()
        }
    };
    let verdicts_match = recomputed == cert.verdicts && cert.certified == recomputed.all();
    if !verdicts_match {
        failures.push("stored verdicts differ from the recomputed ones".into());
    }
    let mut config = cert.config.clone();
    config.seed = cert.seed;
    let reproduced = match certify(&cert.input, &config) {
        Ok(fresh) => fresh == *cert,
        Err(e) => {
            failures.push(format!("re-running the construction failed: {e}"));
            false
        }
    };
    if !reproduced {
        failures.push("the stored certificate is not reproduced by a fresh run".into());
    }
    VerifyReport { recomputed, verdicts_match, reproduced, failures }
}
