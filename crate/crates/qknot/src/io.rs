//! JSON documents for curves, transforms and points.
//!
//! Every document carries `"schema": 1`. Scalars are written as text
//! (`"3/4"`, `"1-2√2"`), so reading back what was written is lossless.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::curve::{Ambient, RationalCurve};
use crate::error::{Error, Result};
use crate::exact::{HomPoly, Scalar};
use crate::projective::{ProjPoint, ProjTransform};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub schema: u32,
    pub ambient: Ambient,
    pub degree: usize,
    /// Coefficients of each coordinate form, `s^d` first.
    pub polys: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

fn check_schema(s: u32) -> Result<()> {
    if s != SCHEMA {
        return Err(Error::Parse(format!(
            "unsupported schema {s}, expected {SCHEMA}"
        )));
    }
    Ok(())
}

fn parse_scalars(v: &[String]) -> Result<Vec<Scalar>> {
    v.iter().map(|x| x.parse()).collect()
}

impl CurveFile {
    pub fn from_curve(c: &RationalCurve) -> Self {
        CurveFile {
            schema: SCHEMA,
            ambient: c.ambient(),
            degree: c.degree(),
            polys: c.polys().iter().map(HomPoly::to_strings).collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn to_curve(&self) -> Result<RationalCurve> {
        check_schema(self.schema)?;
        if self.polys.len() != 5 {
            return Err(Error::Parse(format!(
                "expected 5 forms, found {}",
                self.polys.len()
            )));
        }
        let mut polys = vec![];
        for (i, p) in self.polys.iter().enumerate() {
            if p.len() != self.degree + 1 {
                return Err(Error::Parse(format!(
                    "form {i} has {} coefficients, degree {} needs {}",
                    p.len(),
                    self.degree,
                    self.degree + 1
                )));
            }
            polys.push(HomPoly::new(parse_scalars(p)?));
        }
        RationalCurve::new(self.ambient, polys)
    }
}

pub fn curve_to_json(c: &RationalCurve) -> String {
    to_json(&CurveFile::from_curve(c))
}

pub fn curve_from_json(text: &str) -> Result<RationalCurve> {
    let f: CurveFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_curve()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformFile {
    pub schema: u32,
    pub matrix: Vec<Vec<String>>,
}

impl TransformFile {
    pub fn from_transform(t: &ProjTransform) -> Self {
        TransformFile {
            schema: SCHEMA,
            matrix: t.to_strings(),
        }
    }

    pub fn to_transform(&self) -> Result<ProjTransform> {
        check_schema(self.schema)?;
        ProjTransform::new(
            self.matrix
                .iter()
                .map(|r| parse_scalars(r))
                .collect::<Result<_>>()?,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointFile {
    pub schema: u32,
    pub coords: Vec<String>,
}

impl PointFile {
    pub fn from_point(p: &ProjPoint) -> Self {
        PointFile {
            schema: SCHEMA,
            coords: p.to_strings(),
        }
    }

    pub fn to_point(&self) -> Result<ProjPoint> {
        check_schema(self.schema)?;
        ProjPoint::new(parse_scalars(&self.coords)?)
    }
}

/// A point written inline as `[a:b:c:d:e]` or `a,b,c,d,e`.
pub fn parse_point(text: &str) -> Result<ProjPoint> {
    let t = text.trim();
    let t = t
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(t);
    let sep = if t.contains(':') { ':' } else { ',' };
    let coords = t
        .split(sep)
        .map(|x| x.parse())
        .collect::<Result<Vec<Scalar>>>()?;
    ProjPoint::new(coords)
}

/// A parameter written as `x` (meaning `[x:1]`), `[s:t]` or `inf`.
pub fn parse_param(text: &str) -> Result<(Scalar, Scalar)> {
    let t = text.trim();
    if t == "inf" || t == "∞" {
        return Ok((Scalar::one(), Scalar::zero()));
    }
    if let Some(inner) = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let v = inner
            .split(':')
            .map(|x| x.parse())
            .collect::<Result<Vec<Scalar>>>()?;
        if v.len() != 2 || (v[0].is_zero() && v[1].is_zero()) {
            return Err(Error::Parse(format!("bad parameter '{text}'")));
        }
        return Ok((v[0].clone(), v[1].clone()));
    }
    Ok((t.parse()?, Scalar::one()))
}
