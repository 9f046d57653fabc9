//! JSON form of algebra elements:
//! `[{"exp": [a1, b1, a2, b2], "coeff": <text or linear form>}, ...]`
//! sorted by exponent. Linear forms are
//! `{"constant": <text>, "terms": [{"tag": t, "k": [i1, i2, i3, i4], "coeff": <text>}]}`.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::field::{LinForm, UnknownSymbol};
use crate::parse::{parse_ratfunc, ParseError};

use super::{Scalar, WeylElement, WeylMonomial};

#[derive(Debug, Error)]
pub enum JsonFormatError {
    #[error("malformed element JSON: {0}")]
    Shape(String),
    #[error("bad coefficient text: {0}")]
    Coeff(#[from] ParseError),
}

fn shape(msg: &str) -> JsonFormatError {
    JsonFormatError::Shape(msg.to_string())
}

pub fn linform_to_json(l: &LinForm) -> Value {
    let terms: Vec<Value> = l
        .coeffs()
        .iter()
        .map(|(k, c)| json!({"tag": k.tag, "k": k.index, "coeff": c.to_text()}))
        .collect();
    json!({"constant": l.constant_part().to_text(), "terms": terms})
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(r) => Value::String(r.to_text()),
        Scalar::Lin(l) => linform_to_json(l),
    }
}

pub fn element_to_json(e: &WeylElement) -> Value {
    Value::Array(
        e.terms()
            .iter()
            .map(|(m, s)| json!({"exp": m.0, "coeff": scalar_to_json(s)}))
            .collect(),
    )
}

pub fn linform_from_json(v: &Value) -> Result<LinForm, JsonFormatError> {
    let constant = v
        .get("constant")
        .and_then(Value::as_str)
        .ok_or_else(|| shape("linear form needs a constant"))?;
    let mut coeffs = BTreeMap::new();
    for t in v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("linear form needs terms"))?
    {
        let tag = t
            .get("tag")
            .and_then(Value::as_u64)
            .ok_or_else(|| shape("term tag"))? as u8;
        let k: [u8; 4] = serde_json::from_value(t.get("k").cloned().unwrap_or(Value::Null))
            .map_err(|_| shape("term index"))?;
        let c = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| shape("term coeff"))?;
        coeffs.insert(UnknownSymbol::new(tag, k), parse_ratfunc(c)?);
    }
    Ok(LinForm::from_parts(parse_ratfunc(constant)?, coeffs))
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar, JsonFormatError> {
    match v {
        Value::String(s) => Ok(Scalar::Rat(parse_ratfunc(s)?)),
        Value::Object(_) => Ok(Scalar::from_linform(linform_from_json(v)?)),
        _ => Err(shape("coefficient must be a string or object")),
    }
}

pub fn element_from_json(v: &Value) -> Result<WeylElement, JsonFormatError> {
    let arr = v.as_array().ok_or_else(|| shape("element must be an array"))?;
    let mut out = WeylElement::zero();
    for t in arr {
        let exp: [i32; 4] = serde_json::from_value(t.get("exp").cloned().unwrap_or(Value::Null))
            .map_err(|_| shape("exp must be four integers"))?;
        let coeff = scalar_from_json(t.get("coeff").ok_or_else(|| shape("missing coeff"))?)?;
        out.add_term(WeylMonomial(exp), &coeff);
    }
    Ok(out)
}
