//! JSON documents: families, point sets and generator specs.
//!
//! Coordinates are integers or exact `"p/q"` strings. Floats are rejected so
//! that every document round-trips bit for bit.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use convex_order::famgen::{GenKind, GenSpec};
use convex_order::{ConvexBody, Family, Point, Scalar};
use num::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub schema: u32,
    pub bodies: Vec<BodyDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BodyDocument {
    pub id: String,
    pub vertices: Vec<[Value; 2]>,
}

/// An exact rational from a JSON integer or a `"p/q"` string.
pub fn parse_scalar(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let text = n.to_string();
            let int = BigInt::from_str(&text)
                .map_err(|_| anyhow!("coordinate {text} is not an integer; write it as \"p/q\""))?;
            Ok(Scalar::from_integer(int))
        }
        Value::String(s) => parse_scalar_str(s),
        other => bail!("coordinate {other} is neither an integer nor a \"p/q\" string"),
    }
}

pub fn parse_scalar_str(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| anyhow!("bad rational `{s}`"))?;
    let den = BigInt::from_str(den).map_err(|_| anyhow!("bad rational `{s}`"))?;
    if den == BigInt::from(0) {
        bail!("zero denominator in `{s}`");
    }
    Ok(Scalar::new(num, den))
}

/// Integers as JSON numbers, everything else as a `"p/q"` string.
pub fn scalar_value(v: &Scalar) -> Value {
    if v.is_integer() {
        Value::Number(Number::from_str(&v.numer().to_string()).expect("integer literal"))
    } else {
        Value::String(v.to_string())
    }
}

pub fn big_value(v: &impl ToString) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub fn point_value(p: &Point) -> Value {
    Value::Array(vec![scalar_value(&p.x), scalar_value(&p.y)])
}

pub fn parse_point(pair: &[Value; 2]) -> Result<Point> {
    Ok(Point::new(parse_scalar(&pair[0])?, parse_scalar(&pair[1])?))
}

impl FamilyDocument {
    pub fn from_family(f: &Family) -> FamilyDocument {
        FamilyDocument {
            schema: SCHEMA,
            bodies: f
                .iter()
                .map(|b| BodyDocument {
                    id: b.id().to_string(),
                    vertices: b
                        .vertices()
                        .iter()
                        .map(|p| [scalar_value(&p.x), scalar_value(&p.y)])
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn into_family(self) -> Result<Family> {
        if self.schema != SCHEMA {
            bail!("unsupported schema version {}", self.schema);
        }
        let bodies = self
            .bodies
            .into_iter()
            .map(|b| {
                let pts = b
                    .vertices
                    .iter()
                    .map(parse_point)
                    .collect::<Result<Vec<_>>>()
                    .with_context(|| format!("body `{}`", b.id))?;
                Ok(ConvexBody::new(b.id, pts)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Family::new(bodies)?)
    }
}

pub fn read_family(path: &str) -> Result<Family> {
    let text = read_input(path)?;
    let doc: FamilyDocument =
        serde_json::from_str(&text).with_context(|| format!("parsing family document {path}"))?;
    doc.into_family()
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        return std::io::read_to_string(std::io::stdin()).context("reading standard input");
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

/// `{"schema": 1, "points": {"id": [x, y], ...}}`, one point per body id.
#[derive(Debug, Serialize, Deserialize)]
pub struct PointsDocument {
    pub schema: u32,
    pub points: BTreeMap<String, [Value; 2]>,
}

/// Points and a body-to-point bijection for the family, in member order.
pub fn read_points(path: &str, f: &Family) -> Result<(Vec<Point>, Vec<usize>)> {
    let doc: PointsDocument = serde_json::from_str(&read_input(path)?)
        .with_context(|| format!("parsing points document {path}"))?;
    if doc.schema != SCHEMA {
        bail!("unsupported schema version {}", doc.schema);
    }
    if doc.points.len() != f.len() {
        bail!("{} points for {} bodies", doc.points.len(), f.len());
    }
    let mut points = Vec::with_capacity(f.len());
    for b in f.iter() {
        let pair = doc
            .points
            .get(b.id())
            .ok_or_else(|| anyhow!("no point for body `{}`", b.id()))?;
        points.push(parse_point(pair)?);
    }
    Ok((points, (0..f.len()).collect()))
}

pub fn points_document(f: &Family, points: &[Point], bijection: &[usize]) -> Value {
    let map: serde_json::Map<String, Value> = f
        .iter()
        .enumerate()
        .map(|(i, b)| (b.id().to_string(), point_value(&points[bijection[i]])))
        .collect();
    serde_json::json!({ "schema": SCHEMA, "points": map })
}

/// Generator parameters; omitted fields take the library defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub kind: Option<String>,
    pub vertices: Option<usize>,
    pub scale: Option<i64>,
    pub aspect: Option<i64>,
}

impl SpecDocument {
    pub fn into_spec(self) -> Result<GenSpec> {
        let kind = GenKind::from_name(self.kind.as_deref().unwrap_or("disjoint-random"))?;
        let mut spec = GenSpec::new(self.seed.unwrap_or(0), self.count.unwrap_or(5), kind);
        if let Some(v) = self.vertices {
            spec.vertices = v;
        }
        if let Some(s) = self.scale {
            spec.scale = s;
        }
        if let Some(a) = self.aspect {
            spec.aspect = a;
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use convex_order::famgen::fixture;
    use serde_json::json;

    #[test]
    fn scalars_round_trip() {
        for text in [
            "0",
            "-7",
            "3/4",
            "-5/64",
            "123456789012345678901234567890/7",
        ] {
            let v = parse_scalar(&Value::String(text.into())).unwrap();
            let back = parse_scalar(&scalar_value(&v)).unwrap();
            assert_eq!(v, back);
        }
        assert_eq!(
            parse_scalar(&json!("6/8")).unwrap(),
            parse_scalar(&json!("3/4")).unwrap()
        );
        assert!(parse_scalar(&json!(0.5)).is_err());
        assert!(parse_scalar(&json!("1/0")).is_err());
        assert!(parse_scalar(&json!(null)).is_err());
    }

    #[test]
    fn family_round_trip() {
        let f = fixture("hidden4").unwrap();
        let text = serde_json::to_string(&FamilyDocument::from_family(&f)).unwrap();
        let back: FamilyDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_family().unwrap(), f);
    }

    #[test]
    fn invalid_bodies_are_reported() {
        let doc: FamilyDocument = serde_json::from_value(json!({
            "schema": 1,
            "bodies": [{"id": "a", "vertices": [[0, 0], [1, 1], [2, 2]]}]
        }))
        .unwrap();
        assert!(doc.into_family().is_err());
    }
}
