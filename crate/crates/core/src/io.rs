//! JSON schemas for polytopes, fans, classes and certificates.
//!
//! Integers are written as JSON numbers when they fit in 64 bits and as
//! decimal strings otherwise; rationals are `"numerator/denominator"`
//! strings. Object keys come out sorted.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::exact::{parse_rat, rat_to_string, IntMatrix, Rat, RatVector};
use crate::geometry::{DivisorClass, Fan, GeometryError, LatticePolytope};
use crate::pipeline::{Certificate, CertifyConfig, PlacementData, Verdicts, WeightData};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn schema(msg: impl Into<String>) -> IoError {
    IoError::Schema(msg.into())
}

pub fn int_to_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt, IoError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(schema(format!("{n} is not an integer")))
            }
        }
        Value::String(s) => s.parse().map_err(|_| schema(format!("{s:?} is not an integer"))),
        _ => Err(schema(format!("expected an integer, got {v}"))),
    }
}

pub fn ints_to_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, IoError> {
    v.as_array().ok_or_else(|| schema(format!("{what} must be an array")))
}

pub fn ints_from_json(v: &Value) -> Result<Vec<BigInt>, IoError> {
    array(v, "integer vector")?.iter().map(int_from_json).collect()
}

fn matrix_from_json(v: &Value) -> Result<Vec<Vec<BigInt>>, IoError> {
    array(v, "integer matrix")?.iter().map(ints_from_json).collect()
}

fn indices_from_json(v: &Value) -> Result<Vec<usize>, IoError> {
    array(v, "index list")?
        .iter()
        .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| schema("index must be a non-negative integer")))
        .collect()
}

pub fn rat_from_json(v: &Value) -> Result<Rat, IoError> {
    match v {
        Value::String(s) => parse_rat(s).ok_or_else(|| schema(format!("{s:?} is not a rational"))),
        _ => int_from_json(v).map(Rat::from_integer),
    }
}

fn rats_to_json(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(|q| Value::String(rat_to_string(q))).collect())
}

fn rats_from_json(v: &Value) -> Result<RatVector, IoError> {
    array(v, "rational vector")?.iter().map(rat_from_json).collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, IoError> {
    v.get(key).ok_or_else(|| schema(format!("missing key {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize, IoError> {
    field(v, key)?.as_u64().map(|u| u as usize).ok_or_else(|| schema(format!("{key:?} must be a count")))
}

fn u64_field(v: &Value, key: &str) -> Result<u64, IoError> {
    field(v, key)?.as_u64().ok_or_else(|| schema(format!("{key:?} must be a non-negative integer")))
}

fn bool_field(v: &Value, key: &str) -> Result<bool, IoError> {
    field(v, key)?.as_bool().ok_or_else(|| schema(format!("{key:?} must be a boolean")))
}

pub fn polytope_to_json(p: &LatticePolytope) -> Value {
    json!({
        "ambient_dim": p.ambient_dim(),
        "vertices": p.vertices().iter().map(|v| ints_to_json(v)).collect::<Vec<_>>(),
    })
}

pub fn polytope_from_json(v: &Value) -> Result<LatticePolytope, IoError> {
    let dim = usize_field(v, "ambient_dim")?;
    let vertices = matrix_from_json(field(v, "vertices")?)?;
    Ok(LatticePolytope::new(dim, vertices)?)
}

pub fn fan_to_json(f: &Fan) -> Value {
    json!({
        "ambient_dim": f.ambient_dim(),
        "rays": f.rays().iter().map(|v| ints_to_json(v)).collect::<Vec<_>>(),
        "max_cones": f.max_cones(),
    })
}

pub fn fan_from_json(v: &Value) -> Result<Fan, IoError> {
    let dim = usize_field(v, "ambient_dim")?;
    let rays = matrix_from_json(field(v, "rays")?)?;
    let cones = array(field(v, "max_cones")?, "max_cones")?
        .iter()
        .map(indices_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Fan::new(dim, rays, cones)?)
}

pub fn class_to_json(c: &DivisorClass) -> Value {
    json!({ "free": ints_to_json(&c.free), "torsion": ints_to_json(&c.torsion) })
}

pub fn class_from_json(v: &Value) -> Result<DivisorClass, IoError> {
    Ok(DivisorClass { free: ints_from_json(field(v, "free")?)?, torsion: ints_from_json(field(v, "torsion")?)? })
}

fn classes_from_json(v: &Value) -> Result<Vec<DivisorClass>, IoError> {
    array(v, "class list")?.iter().map(class_from_json).collect()
}

fn placement_to_json(p: &PlacementData, k0: u64) -> Value {
    json!({
        "w1": p.w1,
        "w2": p.w2,
        "hyperplane": p.hyperplane,
        "radon_point": rats_to_json(&p.radon_point),
        "transform": p.transform.to_rows().iter().map(|r| ints_to_json(r)).collect::<Vec<_>>(),
        "translation": ints_to_json(&p.translation),
        "interior_direction": ints_to_json(&p.interior_direction),
        "placed": p.placed.iter().map(|v| ints_to_json(v)).collect::<Vec<_>>(),
        "order": p.order,
        "k0": k0,
        "placement_corrected": p.placement_corrected,
    })
}

fn placement_from_json(v: &Value) -> Result<(PlacementData, u64), IoError> {
    let rows = matrix_from_json(field(v, "transform")?)?;
    let cols = rows.first().map_or(0, Vec::len);
    let transform = IntMatrix::from_rows(&rows, cols).map_err(|e| schema(e.to_string()))?;
    let data = PlacementData {
        w1: usize_field(v, "w1")?,
        w2: usize_field(v, "w2")?,
        hyperplane: indices_from_json(field(v, "hyperplane")?)?,
        radon_point: rats_from_json(field(v, "radon_point")?)?,
        transform,
        translation: ints_from_json(field(v, "translation")?)?,
        interior_direction: ints_from_json(field(v, "interior_direction")?)?,
        placed: matrix_from_json(field(v, "placed")?)?,
        order: indices_from_json(field(v, "order")?)?,
        placement_corrected: bool_field(v, "placement_corrected")?,
    };
    Ok((data, u64_field(v, "k0")?))
}

fn verdicts_to_json(v: &Verdicts) -> Value {
    serde_json::to_value(v).expect("plain booleans")
}

fn config_to_json(c: &CertifyConfig) -> Value {
    serde_json::to_value(c).expect("plain fields")
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    let mut m = Map::new();
    m.insert("input".into(), polytope_to_json(&c.input));
    m.insert("placement".into(), placement_to_json(&c.placement, c.k0));
    m.insert("q".into(), polytope_to_json(&c.q));
    m.insert("sigma".into(), fan_to_json(&c.sigma));
    m.insert("r".into(), rats_to_json(&c.weights.r));
    m.insert("alpha".into(), rats_to_json(&c.weights.alpha));
    m.insert("p".into(), rats_to_json(&[c.p.0.clone(), c.p.1.clone()]));
    m.insert("collection".into(), Value::Array(c.collection.iter().map(class_to_json).collect()));
    m.insert("verdicts".into(), verdicts_to_json(&c.verdicts));
    m.insert("multiplicity_total".into(), int_to_json(&c.multiplicity_total));
    m.insert("descended".into(), Value::Array(c.descended.iter().map(class_to_json).collect()));
    m.insert(
        "face_class_group".into(),
        json!({ "rank": c.face_class_group.0, "torsion": ints_to_json(&c.face_class_group.1) }),
    );
    m.insert("oracle".into(), c.oracle.map_or(Value::Null, Value::Bool));
    m.insert("failures".into(), json!(c.failures));
    m.insert("seed".into(), Value::from(c.seed));
    m.insert("certified".into(), Value::Bool(c.certified));
    m.insert("config".into(), config_to_json(&c.config));
    let digest = certificate_digest(&Value::Object(m.clone()));
    m.insert("digest".into(), Value::String(digest));
    Value::Object(m)
}

/// SHA-256 of the compact serialization of every field except `digest`.
pub fn certificate_digest(v: &Value) -> String {
    let mut body = v.clone();
    if let Value::Object(m) = &mut body {
        m.remove("digest");
    }
    let bytes = serde_json::to_vec(&body).expect("values serialize");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Whether the stored `digest` matches the rest of the document.
pub fn digest_matches(v: &Value) -> Result<bool, IoError> {
    let stored = field(v, "digest")?.as_str().ok_or_else(|| schema("digest must be a string"))?;
    Ok(stored == certificate_digest(v))
}

pub fn certificate_from_json(v: &Value) -> Result<Certificate, IoError> {
    field(v, "digest")?;
    let (placement, k0) = placement_from_json(field(v, "placement")?)?;
    let p = rats_from_json(field(v, "p")?)?;
    if p.len() != 2 {
        return Err(schema("p must have two coordinates"));
    }
    let fcg = field(v, "face_class_group")?;
    let oracle = match field(v, "oracle")? {
        Value::Null => None,
        Value::Bool(b) => Some(*b),
        _ => return Err(schema("oracle must be a boolean or null")),
    };
    let failures = array(field(v, "failures")?, "failures")?
        .iter()
        .map(|x| x.as_str().map(str::to_owned).ok_or_else(|| schema("failures must be strings")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Certificate {
        input: polytope_from_json(field(v, "input")?)?,
        placement,
        k0,
        q: polytope_from_json(field(v, "q")?)?,
        sigma: fan_from_json(field(v, "sigma")?)?,
        weights: WeightData { r: rats_from_json(field(v, "r")?)?, alpha: rats_from_json(field(v, "alpha")?)? },
        p: (p[0].clone(), p[1].clone()),
        collection: classes_from_json(field(v, "collection")?)?,
        verdicts: serde_json::from_value(field(v, "verdicts")?.clone())?,
        multiplicity_total: int_from_json(field(v, "multiplicity_total")?)?,
        descended: classes_from_json(field(v, "descended")?)?,
        face_class_group: (usize_field(fcg, "rank")?, ints_from_json(field(fcg, "torsion")?)?),
        oracle,
        failures,
        seed: u64_field(v, "seed")?,
        certified: bool_field(v, "certified")?,
        config: serde_json::from_value(field(v, "config")?.clone())?,
    })
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
