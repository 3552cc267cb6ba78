//! JSON interchange for carriers, structures, assignments and reports.

use std::collections::BTreeMap;
use std::sync::Arc;

use lambdaring::ground::{GroundRing, RingElement};
use lambdaring::report::Report;
use lambdaring::series::TruncSeries;
use lambdaring::structures::{AdamsData, Carrier, LambdaStructure};
use lambdaring::universal::{GeneratorIndex, HomAssignment};
use serde_json::{json, Map, Value};

use crate::CliError;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    v.get(key).ok_or_else(|| CliError::Input(format!("missing field {key:?}")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str, CliError> {
    v.as_str().ok_or_else(|| CliError::Input(format!("{what} must be a string")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64, CliError> {
    v.as_u64().ok_or_else(|| CliError::Input(format!("{what} must be a nonnegative integer")))
}

fn parse_ring(s: &str) -> Result<GroundRing, CliError> {
    s.parse::<GroundRing>().map_err(CliError::from)
}

pub fn carrier_to_json(c: &Carrier) -> Value {
    match c {
        Carrier::Ground(r) => json!({"kind": "ground", "ring": r.to_string()}),
        Carrier::DualNumbers { base, .. } => json!({"kind": "dual", "base": base.to_string()}),
        Carrier::TruncPoly { ring, deg } => json!({"kind": "trunc_poly", "ring": ring.to_string(), "degree": deg}),
        Carrier::PowerSeries { ring, n, d } => {
            json!({"kind": "power_series", "ring": ring.to_string(), "n": n, "filtration": d})
        }
    }
}

pub fn carrier_from_json(v: &Value) -> Result<Carrier, CliError> {
    let kind = as_str(field(v, "kind")?, "carrier kind")?;
    let ring = |key: &str| -> Result<GroundRing, CliError> { parse_ring(as_str(field(v, key)?, key)?) };
    let c = match kind {
        "ground" => Carrier::ground(ring("ring")?),
        "dual" => Carrier::dual(ring("base")?)?,
        "trunc_poly" => Carrier::trunc_poly(ring("ring")?, as_u64(field(v, "degree")?, "degree")? as usize)?,
        "power_series" => {
            let d = match v.get("filtration") {
                Some(d) => as_u64(d, "filtration")? as u32,
                None => 1,
            };
            Carrier::power_series(ring("ring")?, as_u64(field(v, "n")?, "n")? as usize, d)?
        }
        k => return Err(CliError::Input(format!("unknown carrier kind {k:?}"))),
    };
    Ok(c)
}

pub fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn structure_to_json(s: &LambdaStructure) -> Value {
    let mut m = Map::new();
    m.insert("carrier".into(), carrier_to_json(s.carrier()));
    m.insert("primes".into(), json!(s.primes()));
    match s.adams() {
        AdamsData::Identity => {}
        AdamsData::Dual(a) => {
            let obj: Map<String, Value> = a.iter().map(|(p, v)| (p.to_string(), Value::String(v.to_string()))).collect();
            m.insert("adams_dual".into(), Value::Object(obj));
        }
        AdamsData::Series(a) => {
            let obj: Map<String, Value> = a.iter().map(|(p, s)| (p.to_string(), strings(s.coeffs()))).collect();
            m.insert("adams".into(), Value::Object(obj));
        }
    }
    Value::Object(m)
}

fn prime_key(k: &str) -> Result<u64, CliError> {
    k.parse().map_err(|_| CliError::Input(format!("prime key {k:?} is not an integer")))
}

pub fn structure_from_json(v: &Value) -> Result<LambdaStructure, CliError> {
    let carrier = carrier_from_json(field(v, "carrier")?)?;
    let primes_field = v.get("primes");
    let adams = if let Some(a) = v.get("adams") {
        let obj = a.as_object().ok_or_else(|| CliError::Input("adams must be an object".into()))?;
        let ring = carrier.ground_ring().clone();
        let n = carrier.series_truncation().ok_or_else(|| CliError::Input("adams series need a series carrier".into()))?;
        let mut data = BTreeMap::new();
        for (k, cs) in obj {
            let arr = cs.as_array().ok_or_else(|| CliError::Input(format!("adams[{k}] must be an array")))?;
            let coeffs = arr
                .iter()
                .map(|c| Ok(ring.parse_element(as_str(c, "coefficient")?)?))
                .collect::<Result<Vec<RingElement>, CliError>>()?;
            if coeffs.len() != n + 1 {
                return Err(CliError::Input(format!("adams[{k}] has {} coefficients, expected {}", coeffs.len(), n + 1)));
            }
            let zero = RingElement::int(&ring, 0);
            let s = TruncSeries::from_coeffs(&zero, &coeffs, n).with_filtration(carrier.x_filtration());
            data.insert(prime_key(k)?, s);
        }
        AdamsData::Series(data)
    } else if let Some(a) = v.get("adams_dual") {
        let obj = a.as_object().ok_or_else(|| CliError::Input("adams_dual must be an object".into()))?;
        let Carrier::DualNumbers { base, .. } = &carrier else {
            return Err(CliError::Input("adams_dual needs a dual carrier".into()));
        };
        let mut data = BTreeMap::new();
        for (k, c) in obj {
            data.insert(prime_key(k)?, base.parse_element(as_str(c, "a_p")?)?);
        }
        AdamsData::Dual(data)
    } else {
        AdamsData::Identity
    };
    let primes: Vec<u64> = match primes_field {
        Some(p) => p
            .as_array()
            .ok_or_else(|| CliError::Input("primes must be an array".into()))?
            .iter()
            .map(|x| as_u64(x, "prime"))
            .collect::<Result<_, _>>()?,
        None => match &adams {
            AdamsData::Dual(a) => a.keys().copied().collect(),
            AdamsData::Series(a) => a.keys().copied().collect(),
            AdamsData::Identity => return Err(CliError::Input("missing field \"primes\"".into())),
        },
    };
    Ok(LambdaStructure::new(carrier, primes, adams)?)
}

pub fn assignment_to_json(h: &HomAssignment) -> Value {
    let values: Vec<Value> = h
        .values()
        .iter()
        .map(|(g, v)| json!({"p": g.p, "i": g.i, "tail": g.tail, "value": v.to_string()}))
        .collect();
    json!({
        "target": {"ring": h.target().to_string()},
        "primes": h.primes(),
        "n": h.truncation(),
        "depth": h.depth(),
        "values": values,
    })
}

pub fn assignment_from_json(v: &Value) -> Result<HomAssignment, CliError> {
    let target = Arc::new(parse_ring(as_str(field(field(v, "target")?, "ring")?, "target ring")?)?);
    let arr = field(v, "values")?.as_array().ok_or_else(|| CliError::Input("values must be an array".into()))?;
    let mut values = BTreeMap::new();
    for e in arr {
        let p = as_u64(field(e, "p")?, "p")?;
        let i = as_u64(field(e, "i")?, "i")? as usize;
        let tail = field(e, "tail")?
            .as_array()
            .ok_or_else(|| CliError::Input("tail must be an array".into()))?
            .iter()
            .map(|q| as_u64(q, "tail prime"))
            .collect::<Result<Vec<_>, _>>()?;
        let value = target.parse_element(as_str(field(e, "value")?, "value")?)?;
        values.insert(GeneratorIndex::new(p, i, tail), value);
    }
    let mut primes: Vec<u64> = values.keys().map(|g| g.p).collect();
    primes.sort_unstable();
    primes.dedup();
    let primes = match v.get("primes") {
        Some(p) => p
            .as_array()
            .ok_or_else(|| CliError::Input("primes must be an array".into()))?
            .iter()
            .map(|x| as_u64(x, "prime"))
            .collect::<Result<_, _>>()?,
        None => primes,
    };
    let n = match v.get("n") {
        Some(n) => as_u64(n, "n")? as usize,
        None => values.keys().map(|g| g.i).max().unwrap_or(0),
    };
    let depth = match v.get("depth") {
        Some(d) => as_u64(d, "depth")? as usize,
        None => values.keys().map(|g| g.tail.len()).max().unwrap_or(0),
    };
    Ok(HomAssignment::new(target, primes, n, depth, values)?)
}

pub fn report_to_json(r: &Report, seed: u64) -> Value {
    let checks: Vec<Value> =
        r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect();
    json!({"title": r.title, "seed": seed, "passed": r.all_passed(), "checks": checks})
}
