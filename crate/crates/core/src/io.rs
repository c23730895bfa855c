//! JSON formats for matrices, eigenstructures, completion targets and
//! reports.
//!
//! Polynomials are ascending coefficient lists. Rational coefficients are
//! written as strings (`"3"`, `"-1/2"`); residues as integers. Input accepts
//! either form for both fields.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{FieldTag, HomogPoly, Poly, Scalar};
use crate::error::{Error, Result};
use crate::feasibility::CompletionTarget;
use crate::polymatrix::{Eigenstructure, PolyMatrix};
use crate::sequences::Partition;

impl FromStr for FieldTag {
    type Err = Error;

    /// Accepts `Q`, `GF(p)`, `GFp` and `gfp`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldTag::Rationals);
        }
        let lower = t.to_ascii_lowercase();
        let digits = lower
            .strip_prefix("gf")
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
        let p = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field {s:?}")))?;
        FieldTag::prime(p)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FieldJson {
    Name(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

impl FieldJson {
    fn from_tag(f: FieldTag) -> Self {
        match f {
            FieldTag::Rationals => FieldJson::Name("Q".into()),
            FieldTag::Prime(p) => FieldJson::Prime { gf: p },
        }
    }

    fn tag(&self) -> Result<FieldTag> {
        match self {
            FieldJson::Name(s) => s.parse(),
            FieldJson::Prime { gf } => FieldTag::prime(*gf),
        }
    }
}

fn scalar_to_json(c: &Scalar) -> Value {
    match c {
        Scalar::Residue(v) => Value::from(*v),
        Scalar::Rational(_) => Value::String(c.to_string()),
    }
}

fn scalar_from_json(field: FieldTag, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse(field, s),
        Value::Number(n) => Scalar::parse(field, &n.to_string()),
        other => Err(Error::Parse(format!("expected a scalar, found {other}"))),
    }
}

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_to_json).collect())
}

pub fn poly_from_json(field: FieldTag, v: &Value) -> Result<Poly> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a coefficient list, found {v}")))?;
    let coeffs = items
        .iter()
        .map(|c| scalar_from_json(field, c))
        .collect::<Result<_>>()?;
    Poly::new(field, coeffs)
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    field: FieldJson,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
struct HomJson {
    alpha: Value,
    e: usize,
}

#[derive(Serialize, Deserialize)]
struct EigenJson {
    #[serde(default, skip_serializing)]
    field: Option<FieldJson>,
    degree: usize,
    rank: usize,
    hom_factors: Vec<HomJson>,
    col_indices: Partition,
    row_indices: Partition,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TargetJson {
    #[serde(default)]
    field: Option<FieldJson>,
    #[serde(default)]
    rank: Option<usize>,
    #[serde(default)]
    hom_factors: Option<Vec<HomJson>>,
    #[serde(default)]
    finite_factors: Option<Vec<Value>>,
    #[serde(default)]
    infinite_powers: Option<Vec<usize>>,
    #[serde(default)]
    col_indices: Option<Partition>,
    #[serde(default)]
    row_indices: Option<Partition>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("JSON values always serialize")
}

fn resolve_field(own: Option<&FieldJson>, fallback: Option<FieldTag>) -> Result<FieldTag> {
    let own = own.map(FieldJson::tag).transpose()?;
    match (own, fallback) {
        (Some(a), Some(b)) if a != b => Err(Error::FieldMismatch(a, b)),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Err(Error::Parse("no field given".into())),
    }
}

fn homs_from_json(field: FieldTag, items: &[HomJson]) -> Result<Vec<HomogPoly>> {
    items
        .iter()
        .map(|h| HomogPoly::new(poly_from_json(field, &h.alpha)?, h.e))
        .collect()
}

fn homs_to_json(items: &[HomogPoly]) -> Vec<HomJson> {
    items
        .iter()
        .map(|h| HomJson {
            alpha: poly_to_json(h.alpha()),
            e: h.e(),
        })
        .collect()
}

pub fn matrix_to_json(p: &PolyMatrix) -> String {
    to_string(&MatrixJson {
        field: FieldJson::from_tag(p.field()),
        rows: p.rows(),
        cols: p.cols(),
        entries: p
            .to_rows()
            .iter()
            .map(|r| r.iter().map(poly_to_json).collect())
            .collect(),
    })
}

pub fn matrix_from_json(text: &str) -> Result<PolyMatrix> {
    let m: MatrixJson = parse_json(text)?;
    let field = m.field.tag()?;
    if m.entries.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "{} rows declared, {} given",
            m.rows,
            m.entries.len()
        )));
    }
    let entries = m
        .entries
        .iter()
        .map(|row| {
            if row.len() != m.cols {
                return Err(Error::DimensionMismatch(format!(
                    "{} columns declared, row has {}",
                    m.cols,
                    row.len()
                )));
            }
            row.iter().map(|v| poly_from_json(field, v)).collect()
        })
        .collect::<Result<_>>()?;
    PolyMatrix::new(field, entries)
}

pub fn eigenstructure_to_json(es: &Eigenstructure) -> String {
    to_string(&EigenJson {
        field: None,
        degree: es.degree,
        rank: es.rank,
        hom_factors: homs_to_json(&es.hom_factors),
        col_indices: es.col_indices.clone(),
        row_indices: es.row_indices.clone(),
    })
}

/// Reads an eigenstructure; the field comes from a `"field"` key or from
/// `field`.
pub fn eigenstructure_from_json(text: &str, field: Option<FieldTag>) -> Result<Eigenstructure> {
    let e: EigenJson = parse_json(text)?;
    let field = resolve_field(e.field.as_ref(), field)?;
    let homs = homs_from_json(field, &e.hom_factors)?;
    if homs.len() != e.rank {
        return Err(Error::LengthMismatch {
            what: "hom_factors",
            expected: e.rank,
            found: homs.len(),
        });
    }
    Eigenstructure::new(field, e.degree, homs, e.col_indices, e.row_indices)
}

/// Reads a partial target for `z` added rows. Absent components are
/// unprescribed; the rank comes from `"rank"` or from whichever factor list
/// is given.
pub fn target_from_json(text: &str, z: usize, field: Option<FieldTag>) -> Result<CompletionTarget> {
    let t: TargetJson = parse_json(text)?;
    let needs_field = t.hom_factors.is_some() || t.finite_factors.is_some();
    let field = if needs_field {
        Some(resolve_field(t.field.as_ref(), field)?)
    } else {
        None
    };
    let mut out = CompletionTarget::new(z, 0);
    let mut lengths = Vec::new();
    if let Some(h) = &t.hom_factors {
        out.hom_factors = Some(homs_from_json(field.unwrap(), h)?);
        lengths.push(("hom_factors", h.len()));
    }
    if let Some(b) = &t.finite_factors {
        let polys = b
            .iter()
            .map(|v| poly_from_json(field.unwrap(), v))
            .collect::<Result<Vec<_>>>()?;
        out.finite_factors = Some(polys);
        lengths.push(("finite_factors", b.len()));
    }
    if let Some(f) = &t.infinite_powers {
        out.infinite_powers = Some(f.clone());
        lengths.push(("infinite_powers", f.len()));
    }
    out.rank = t.rank.or(lengths.first().map(|l| l.1)).unwrap_or(0);
    if let Some(&(what, found)) = lengths.iter().find(|l| l.1 != out.rank) {
        return Err(Error::LengthMismatch {
            what,
            expected: out.rank,
            found,
        });
    }
    out.col_indices = t.col_indices;
    out.row_indices = t.row_indices;
    Ok(out)
}

/// Writes the prescribed components of `target`.
pub fn target_to_json(target: &CompletionTarget) -> String {
    let mut m = serde_json::Map::new();
    m.insert("rank".into(), target.rank.into());
    if let Some(h) = &target.hom_factors {
        m.insert("hom_factors".into(), serde_json::to_value(homs_to_json(h)).unwrap());
    }
    if let Some(b) = &target.finite_factors {
        m.insert("finite_factors".into(), b.iter().map(poly_to_json).collect());
    }
    if let Some(f) = &target.infinite_powers {
        m.insert("infinite_powers".into(), f.clone().into());
    }
    if let Some(c) = &target.col_indices {
        m.insert("col_indices".into(), c.values().to_vec().into());
    }
    if let Some(v) = &target.row_indices {
        m.insert("row_indices".into(), v.values().to_vec().into());
    }
    to_string(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatrix::eigenstructure;

    const GF2: FieldTag = FieldTag::Prime(2);

    #[test]
    fn field_names() {
        assert_eq!("Q".parse::<FieldTag>().unwrap(), FieldTag::Rationals);
        assert_eq!("gf2".parse::<FieldTag>().unwrap(), GF2);
        assert_eq!("GF(3)".parse::<FieldTag>().unwrap(), FieldTag::Prime(3));
        assert_eq!("gf4".parse::<FieldTag>(), Err(Error::NotPrime(4)));
        assert!("R".parse::<FieldTag>().is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let q = FieldTag::Rationals;
        let p = PolyMatrix::new(
            q,
            vec![vec![
                Poly::new(q, vec![q.ratio(-1, 2).unwrap(), q.one()]).unwrap(),
                Poly::zero(q),
            ]],
        )
        .unwrap();
        let text = matrix_to_json(&p);
        assert_eq!(text, r#"{"field":"Q","rows":1,"cols":2,"entries":[[["-1/2","1"],[]]]}"#);
        assert_eq!(matrix_from_json(&text).unwrap(), p);

        let g = PolyMatrix::from_i64s(GF2, &[&[&[0, 1], &[1]]]);
        let text = matrix_to_json(&g);
        assert_eq!(text, r#"{"field":{"GF":2},"rows":1,"cols":2,"entries":[[[0,1],[1]]]}"#);
        assert_eq!(matrix_from_json(&text).unwrap(), g);
    }

    #[test]
    fn matrix_input_errors() {
        let err = matrix_from_json(r#"{"field":"Q","rows":1,"#).unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("column")), "{err}");
        let err = matrix_from_json(r#"{"field":"Q","rows":2,"cols":1,"entries":[[[1]]]}"#).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
        let err = matrix_from_json(r#"{"field":{"GF":2},"rows":1,"cols":1,"entries":[[[2]]]}"#).unwrap_err();
        assert!(matches!(err, Error::NotInField(..)));
        let m = matrix_from_json(r#"{"field":"Q","rows":1,"cols":1,"entries":[[[1,"2/4"]]]}"#).unwrap();
        assert_eq!(m.get(0, 0).coeff(1), FieldTag::Rationals.ratio(1, 2).unwrap());
    }

    #[test]
    fn eigenstructure_round_trip() {
        let p = PolyMatrix::from_i64s(GF2, &[&[&[0, 1], &[1]]]);
        let es = eigenstructure(&p).unwrap();
        let text = eigenstructure_to_json(&es);
        assert_eq!(
            text,
            r#"{"degree":1,"rank":1,"hom_factors":[{"alpha":[1],"e":0}],"col_indices":[1],"row_indices":[]}"#
        );
        assert_eq!(eigenstructure_from_json(&text, Some(GF2)).unwrap(), es);
        assert!(eigenstructure_from_json(&text, None).is_err());
        let with_field = text.replacen('{', r#"{"field":{"GF":2},"#, 1);
        assert_eq!(eigenstructure_from_json(&with_field, None).unwrap(), es);
        assert!(matches!(
            eigenstructure_from_json(&with_field, Some(FieldTag::Rationals)),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn targets() {
        let t = target_from_json(
            r#"{"hom_factors":[{"alpha":[0,1],"e":0}],"row_indices":[0]}"#,
            1,
            Some(GF2),
        )
        .unwrap();
        assert_eq!(t.rank, 1);
        assert_eq!(t.z, 1);
        assert!(t.col_indices.is_none());
        assert_eq!(t.row_indices.as_ref().unwrap().values(), &[0]);
        let back = target_from_json(&target_to_json(&t), 1, Some(GF2)).unwrap();
        assert_eq!(back, t);

        let f = target_from_json(r#"{"infinite_powers":[0,1]}"#, 1, None).unwrap();
        assert_eq!((f.rank, f.infinite_powers.clone()), (2, Some(vec![0, 1])));
        let err = target_from_json(r#"{"rank":2,"infinite_powers":[0]}"#, 1, None).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { .. }));
        assert!(target_from_json(r#"{"bogus":1}"#, 1, None).is_err());
    }
}
