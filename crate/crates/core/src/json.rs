//! JSON forms of the domain types. Parsing reports the offending field as a
//! JSON pointer.

use serde_json::{json, Value};

use crate::algebra::{AlgebraSpec, Tensor2, Tensor3};
use crate::bialgebra::Cocommutator;
use crate::bracket::PolyBracket;
use crate::coboundary::RMatrix;
use crate::error::{Error, Result};
use crate::exact::Rational;

fn malformed(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Malformed {
        pointer: pointer.into(),
        message: message.into(),
    }
}

fn rational_at(v: &Value, pointer: &str) -> Result<Rational> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|_| malformed(pointer, format!("invalid rational {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("checked"))),
        _ => Err(malformed(
            pointer,
            "expected a rational string \"p/q\" or an integer",
        )),
    }
}

/// Reads a dense nested array of the given shape into row-major order.
fn dense_at(v: &Value, pointer: &str, shape: &[usize], out: &mut Vec<Rational>) -> Result<()> {
    let Some((&len, rest)) = shape.split_first() else {
        out.push(rational_at(v, pointer)?);
        return Ok(());
    };
    let arr = v
        .as_array()
        .ok_or_else(|| malformed(pointer, "expected an array"))?;
    if arr.len() != len {
        return Err(malformed(
            pointer,
            format!("expected {len} entries, found {}", arr.len()),
        ));
    }
    for (i, item) in arr.iter().enumerate() {
        dense_at(item, &format!("{pointer}/{i}"), rest, out)?;
    }
    Ok(())
}

fn dense_field(obj: &Value, field: &str, shape: &[usize]) -> Result<Option<Vec<Rational>>> {
    match obj.get(field) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => {
            let mut out = Vec::new();
            dense_at(v, &format!("/{field}"), shape, &mut out)?;
            Ok(Some(out))
        }
    }
}

fn dim_field(obj: &Value, field: &str) -> Result<usize> {
    if !obj.is_object() {
        return Err(malformed("", "expected a JSON object"));
    }
    let v = obj
        .get(field)
        .ok_or_else(|| malformed(format!("/{field}"), "missing field"))?;
    match v.as_u64() {
        Some(n) if (1..=16).contains(&n) => Ok(n as usize),
        _ => Err(malformed(
            format!("/{field}"),
            "expected a positive integer at most 16",
        )),
    }
}

fn nested(values: &[Rational], shape: &[usize]) -> Value {
    match shape.split_first() {
        None => Value::String(values[0].to_string()),
        Some((_, rest)) => {
            let stride: usize = rest.iter().product();
            Value::Array(
                values
                    .chunks(stride.max(1))
                    .map(|c| nested(c, rest))
                    .collect(),
            )
        }
    }
}

pub fn algebra_from_json(v: &Value) -> Result<AlgebraSpec> {
    let n = dim_field(v, "dim")?;
    let name = match v.get("name") {
        None => "algebra".to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(malformed("/name", "expected a string")),
    };
    let m = dense_field(v, "m", &[n, n, n])?.ok_or_else(|| malformed("/m", "missing field"))?;
    AlgebraSpec::new(name, n, m)
}

pub fn algebra_to_json(spec: &AlgebraSpec) -> Value {
    let n = spec.dim();
    json!({
        "name": spec.name(),
        "dim": n,
        "m": nested(spec.structure_constants(), &[n, n, n]),
    })
}

pub fn bracket_from_json(v: &Value) -> Result<PolyBracket> {
    let n = dim_field(v, "n")?;
    let zero = |len: usize| vec![Rational::zero(); len];
    let c = dense_field(v, "c", &[n, n, n, n])?.unwrap_or_else(|| zero(n.pow(4)));
    let b = dense_field(v, "b", &[n, n, n])?.unwrap_or_else(|| zero(n.pow(3)));
    let a = dense_field(v, "a", &[n, n])?.unwrap_or_else(|| zero(n * n));
    PolyBracket::from_parts(n, c, b, a).map_err(|e| match e {
        Error::NotAntisymmetric { i, j } => malformed(
            format!("/c/{i}/{j}"),
            format!("bracket part at upper indices ({i},{j}) is not antisymmetric"),
        ),
        other => other,
    })
}

/// Omits the linear and constant parts when they vanish.
pub fn bracket_to_json(b: &PolyBracket) -> Value {
    let n = b.dim();
    let mut obj = json!({ "n": n, "c": nested(b.quadratic_coeffs(), &[n, n, n, n]) });
    if b.has_linear_part() {
        obj["b"] = nested(b.linear_coeffs(), &[n, n, n]);
    }
    if b.has_constant_part() {
        obj["a"] = nested(b.constant_coeffs(), &[n, n]);
    }
    obj
}

pub fn rmatrix_from_json(v: &Value) -> Result<RMatrix> {
    let n = dim_field(v, "n")?;
    let r = dense_field(v, "r", &[n, n])?.ok_or_else(|| malformed("/r", "missing field"))?;
    RMatrix::new(Tensor2::from_coeffs(n, r)?).map_err(|e| match e {
        Error::NotAntisymmetric { i, j } => malformed(
            format!("/r/{i}/{j}"),
            format!("r[{i}][{j}] != -r[{j}][{i}]"),
        ),
        other => other,
    })
}

pub fn rmatrix_to_json(r: &RMatrix) -> Value {
    let n = r.dim();
    json!({ "n": n, "r": nested(r.tensor().coeffs(), &[n, n]) })
}

pub fn cocommutator_from_json(v: &Value) -> Result<Cocommutator> {
    let n = dim_field(v, "n")?;
    let d = dense_field(v, "d", &[n, n, n])?.ok_or_else(|| malformed("/d", "missing field"))?;
    Cocommutator::new(n, d).map_err(|e| match e {
        Error::NotAntisymmetric { i, j } => {
            malformed(format!("/d/{i}/{j}"), "not antisymmetric in (i,j)")
        }
        other => other,
    })
}

pub fn cocommutator_to_json(d: &Cocommutator) -> Value {
    let n = d.dim();
    json!({ "n": n, "d": nested(d.coeffs(), &[n, n, n]) })
}

pub fn tensor3_from_json(v: &Value) -> Result<Tensor3> {
    let n = dim_field(v, "n")?;
    let t = dense_field(v, "t", &[n, n, n])?.ok_or_else(|| malformed("/t", "missing field"))?;
    Tensor3::from_coeffs(n, t)
}
