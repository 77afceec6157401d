//! Text and JSON forms of polytopes.
//!
//! Text: one inequality per line, `a_1 ... a_d | b` meaning `a . x <= b`,
//! integer coefficients. JSON mirrors the same fields; vertices are exact
//! fraction strings `"p/q"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_fraction, parse_fraction, ExactField};
use crate::vector::Vector;

use super::{Inequality, Polytope};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityJson {
    pub normal: Vec<serde_json::Value>,
    pub offset: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub inequalities: Vec<InequalityJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices: Option<Vec<Vec<String>>>,
}

fn int_value<F: ExactField>(x: &F) -> serde_json::Value {
    let s = format_fraction(x);
    match s.parse::<i64>() {
        Ok(i) => serde_json::Value::from(i),
        Err(_) => serde_json::Value::from(s),
    }
}

fn value_to_field<F: ExactField>(v: &serde_json::Value) -> Result<F> {
    let s = match v {
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::String(s) => s.clone(),
        other => return Err(Error::Parameter(format!("expected a number, got {other}"))),
    };
    parse_fraction(&s).ok_or_else(|| Error::Parameter(format!("not an exact number: {s}")))
}

impl<F: ExactField> Polytope<F> {
    pub fn to_hrep_text(&self) -> String {
        let mut out = String::new();
        for h in self.inequalities() {
            out.push_str(&h.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson {
            dim: self.dim(),
            inequalities: self
                .inequalities()
                .iter()
                .map(|h| InequalityJson {
                    normal: h.normal().iter().map(int_value).collect(),
                    offset: int_value(h.offset()),
                })
                .collect(),
            vertices: self
                .known_vertices()
                .map(|vs| vs.iter().map(|v| v.to_fraction_strings()).collect()),
        }
    }

    pub fn from_json(json: &PolytopeJson) -> Result<Self> {
        let hrep = json
            .inequalities
            .iter()
            .map(|h| {
                let normal = h
                    .normal
                    .iter()
                    .map(value_to_field)
                    .collect::<Result<Vec<F>>>()?;
                Ok(Inequality::new(Vector::new(normal), value_to_field(&h.offset)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut p = Polytope::new(json.dim, hrep)?;
        if let Some(vs) = &json.vertices {
            let verts = vs
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|s| {
                            parse_fraction(s)
                                .ok_or_else(|| Error::Parameter(format!("bad fraction {s:?}")))
                        })
                        .collect::<Result<Vec<F>>>()
                        .map(Vector::new)
                })
                .collect::<Result<Vec<_>>>()?;
            p = p.with_vertices(verts);
        }
        Ok(p)
    }
}

/// Parses the line-oriented text format. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_hrep_text<F: ExactField>(text: &str) -> Result<Polytope<F>> {
    let mut hrep = Vec::new();
    let mut dim = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Parameter(format!("line {}: expected `a_1 .. a_d | b`", lineno + 1));
        let (lhs, rhs) = line.split_once('|').ok_or_else(bad)?;
        let normal = lhs
            .split_whitespace()
            .map(parse_fraction)
            .collect::<Option<Vec<F>>>()
            .ok_or_else(bad)?;
        let offset = parse_fraction(rhs.trim()).ok_or_else(bad)?;
        match dim {
            None => dim = Some(normal.len()),
            Some(d) if d != normal.len() => {
                return Err(Error::DimensionMismatch { expected: d, found: normal.len() })
            }
            _ => {}
        }
        hrep.push(Inequality::new(Vector::new(normal), offset));
    }
    Polytope::new(dim.unwrap_or(0), hrep)
}
