//! JSON shapes of everything the command line prints.
//!
//! Exact numbers `a + b√5` are written as `{"a":[num,den],"b":[num,den]}`.
//! Integers that do not fit in an `i64` are written as decimal strings.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::exact::{QuadraticNumber, Rational};
use crate::graph::io::GraphDocument;
use crate::graph::ChainGraphSpec;
use crate::search::{CounterexampleRecord, UnconfirmedCandidate};
use crate::theorems::{Certificate, DownerReport, Eigenvalue, TableReport};

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(small) => json!(small),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value, field: &str) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("{field}: expected an integer, got {n}")),
        Value::String(s) => s.parse().map_err(|_| format!("{field}: expected an integer, got {s:?}")),
        other => Err(format!("{field}: expected an integer, got {other}")),
    }
}

fn rational_json(r: &Rational) -> Value {
    json!([int_json(r.numer()), int_json(r.denom())])
}

fn rational_from_json(v: &Value, field: &str) -> Result<Rational, String> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| format!("{field}: expected [num, den]"))?;
    let num = int_from_json(&pair[0], field)?;
    let den = int_from_json(&pair[1], field)?;
    if den.is_zero() {
        return Err(format!("{field}: denominator is zero"));
    }
    Ok(Rational::new(num, den))
}

pub fn exact_json(q: &QuadraticNumber) -> Value {
    json!({"a": rational_json(q.rational_part()), "b": rational_json(q.surd_part())})
}

pub fn exact_from_json(v: &Value) -> Result<QuadraticNumber, String> {
    let obj = v.as_object().ok_or("expected an object with fields a and b")?;
    if let Some(extra) = obj.keys().find(|k| *k != "a" && *k != "b") {
        return Err(format!("unknown field {extra:?}"));
    }
    let a = rational_from_json(obj.get("a").ok_or("missing field a")?, "a")?;
    let b = rational_from_json(obj.get("b").ok_or("missing field b")?, "b")?;
    Ok(QuadraticNumber::new(a, b))
}

pub fn eigenvalue_json(e: &Eigenvalue) -> Value {
    match e {
        Eigenvalue::Exact(q) => exact_json(q),
        Eigenvalue::Float(x) => json!(x),
    }
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Exact(x) => Value::Array(x.iter().map(exact_json).collect()),
        Certificate::Float(x) => json!(x),
    }
}

pub fn spec_json(spec: &ChainGraphSpec) -> Value {
    serde_json::to_value(GraphDocument::from_spec(spec)).expect("graph documents always serialize")
}

pub fn downer_json(r: &DownerReport) -> Value {
    let vertices: Vec<Value> = r
        .vertices
        .iter()
        .map(|v| {
            json!({
                "vertex": v.vertex,
                "name": v.name,
                "mul_parent": v.mul_parent,
                "mul_child": v.mul_child,
                "is_downer": v.is_downer,
                "mode": v.mode,
                "ambiguous": v.ambiguous,
            })
        })
        .collect();
    json!({
        "graph": r.graph,
        "eigenvalue": eigenvalue_json(&r.eigenvalue),
        "mode": r.mode,
        "mul_parent": r.mul_parent,
        "parent_ambiguous": r.parent_ambiguous,
        "eigenvector": r.eigenvector.as_ref().map(certificate_json),
        "non_downers": r.non_downer_names(),
        "vertices": vertices,
    })
}

pub fn record_json(r: &CounterexampleRecord) -> Value {
    json!({
        "type": "record",
        "spec": spec_json(&r.spec),
        "vertex": r.vertex,
        "name": r.name,
        "eigenvalue": eigenvalue_json(&r.eigenvalue),
        "mul_parent": r.mul_parent,
        "mul_child": r.mul_child,
        "mode": r.mode,
        "certificate": certificate_json(&r.certificate),
    })
}

pub fn unconfirmed_json(c: &UnconfirmedCandidate) -> Value {
    json!({
        "type": "unconfirmed",
        "spec": spec_json(&c.spec),
        "vertex": c.vertex,
        "name": c.name,
        "eigenvalue": c.eigenvalue,
        "mul_parent": c.mul_parent,
        "mul_child": c.mul_child,
        "reason": c.reason,
    })
}

pub fn table_json(t: &TableReport) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|row| {
            let columns: Vec<Value> = row
                .columns
                .iter()
                .map(|c| {
                    json!({
                        "upper": c.upper,
                        "sum": exact_json(&c.sum),
                        "expected": exact_json(&c.expected),
                        "holds": c.holds(),
                    })
                })
                .collect();
            json!({"s": row.s, "entry": exact_json(&row.entry), "columns": columns})
        })
        .collect();
    json!({
        "family": t.family,
        "passed": t.passed(),
        "period_sum": exact_json(&t.period_sum),
        "rows": rows,
    })
}
