//! JSON encoding of operators for the command line tools.
//!
//! Coefficients are stored sparsely as `[exponent, value]` pairs with exact
//! rationals rendered as `"p/q"` strings, so round trips never lose
//! precision and the files stay diffable.

use qforge_rings::poly::Poly;
use qforge_rings::rat::{rat_parse, rat_str, Rat};
use qforge_rings::ratfunc::RatFunc;
use qforge_rings::ring::Ring;
use serde_json::{json, Value};

use crate::qdiff::{QDiffOperator, QPoly};
use crate::weyl::WeylOperator;
use crate::OpalgError;

fn bad(msg: impl Into<String>) -> OpalgError {
    OpalgError::BadOperatorJson(msg.into())
}

fn qpoly_to_json(p: &QPoly) -> Value {
    let mut terms = Vec::new();
    for e in p.lo..=p.lo + p.c.len() as i64 - 1 {
        let c = p.coeff(e);
        if !c.is_zero() {
            terms.push(json!([e, rat_str(&c)]));
        }
    }
    Value::Array(terms)
}

fn qpoly_from_json(v: &Value) -> Result<QPoly, OpalgError> {
    let terms = v.as_array().ok_or_else(|| bad("coefficient is not an array"))?;
    let mut out = QPoly::zero();
    for t in terms {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
        let e = pair[0].as_i64().ok_or_else(|| bad("exponent is not an integer"))?;
        let s = pair[1].as_str().ok_or_else(|| bad("value is not a string"))?;
        let c = rat_parse(s).map_err(bad)?;
        out = out.add(&QPoly::monomial(c, e));
    }
    Ok(out)
}

fn rat_poly_to_json(p: &Poly<Rat>) -> Value {
    let mut terms = Vec::new();
    for (k, c) in p.c.iter().enumerate() {
        if !c.is_zero() {
            terms.push(json!([k, rat_str(c)]));
        }
    }
    Value::Array(terms)
}

fn rat_poly_from_json(v: &Value) -> Result<Poly<Rat>, OpalgError> {
    let terms = v.as_array().ok_or_else(|| bad("polynomial is not an array"))?;
    let mut out = Poly::zero();
    for t in terms {
        let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
        let k = pair[0].as_u64().ok_or_else(|| bad("exponent is not a nonnegative integer"))?;
        let s = pair[1].as_str().ok_or_else(|| bad("value is not a string"))?;
        let c = rat_parse(s).map_err(bad)?;
        out = out.add(&Poly::monomial(c, k as usize));
    }
    Ok(out)
}

pub fn qdiff_to_json(op: &QDiffOperator) -> Value {
    let mut coeffs = Vec::new();
    for (j, p) in op.a.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let mut lam = Vec::new();
        for (i, c) in p.c.iter().enumerate() {
            if !c.is_zero() {
                lam.push(json!([i, qpoly_to_json(c)]));
            }
        }
        coeffs.push(json!([j, Value::Array(lam)]));
    }
    json!({
        "vars": ["lambda"],
        "shift": "sigma",
        "step": op.step,
        "coeffs": Value::Array(coeffs),
    })
}

pub fn qdiff_from_json(v: &Value) -> Result<QDiffOperator, OpalgError> {
    let obj = v.as_object().ok_or_else(|| bad("operator is not an object"))?;
    let step = obj
        .get("step")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing step"))?;
    if step == 0 {
        return Err(bad("step must be positive"));
    }
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing coeffs"))?;
    let mut a: Vec<Poly<QPoly>> = Vec::new();
    for entry in coeffs {
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| bad("coeff entry is not a pair"))?;
        let j = pair[0].as_u64().ok_or_else(|| bad("shift order is not a nonnegative integer"))? as usize;
        let lam = pair[1].as_array().ok_or_else(|| bad("lambda part is not an array"))?;
        let mut p = Poly::zero();
        for term in lam {
            let t = term
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| bad("lambda term is not a pair"))?;
            let i = t[0].as_u64().ok_or_else(|| bad("lambda degree is not a nonnegative integer"))? as usize;
            p = p.add(&Poly::monomial(qpoly_from_json(&t[1])?, i));
        }
        if a.len() <= j {
            a.resize(j + 1, Poly::zero());
        }
        a[j] = a[j].add(&p);
    }
    Ok(QDiffOperator::new(step, a))
}

pub fn weyl_to_json(op: &WeylOperator) -> Value {
    let mut coeffs = Vec::new();
    for (i, c) in op.c.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        coeffs.push(json!([
            i,
            {
                "num": rat_poly_to_json(&c.num),
                "den": rat_poly_to_json(&c.den),
            }
        ]));
    }
    json!({
        "vars": ["lambda"],
        "gen": "theta",
        "coeffs": Value::Array(coeffs),
    })
}

pub fn weyl_from_json(v: &Value) -> Result<WeylOperator, OpalgError> {
    let obj = v.as_object().ok_or_else(|| bad("operator is not an object"))?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing coeffs"))?;
    let mut c: Vec<RatFunc<Rat>> = Vec::new();
    for entry in coeffs {
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| bad("coeff entry is not a pair"))?;
        let i = pair[0].as_u64().ok_or_else(|| bad("theta order is not a nonnegative integer"))? as usize;
        let frac = pair[1].as_object().ok_or_else(|| bad("coefficient is not an object"))?;
        let num = rat_poly_from_json(frac.get("num").ok_or_else(|| bad("missing num"))?)?;
        let den = rat_poly_from_json(frac.get("den").ok_or_else(|| bad("missing den"))?)?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        if c.len() <= i {
            c.resize(i + 1, RatFunc::zero());
        }
        c[i] = RatFunc::new(num, den);
    }
    Ok(WeylOperator::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{pf_operator, qpf_factorial_operator};
    use qforge_rings::rat::{rat, rat_i};

    #[test]
    fn qdiff_round_trip_preserves_the_operator() {
        let op = qpf_factorial_operator(&[2, 2], &[1, 1, 1, 1]);
        let v = qdiff_to_json(&op);
        let back = qdiff_from_json(&v).unwrap();
        assert_eq!(back.step, op.step);
        assert_eq!(back.a, op.a);
        // serialized text survives a print cycle too
        let s = serde_json::to_string(&v).unwrap();
        let v2: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(qdiff_from_json(&v2).unwrap().a, op.a);
    }

    #[test]
    fn weyl_round_trip_preserves_the_operator() {
        let op = pf_operator(&[rat(1, 2), rat(1, 2)], &[rat_i(1), rat_i(1)], &rat_i(16)).unwrap();
        let v = weyl_to_json(&op);
        let back = weyl_from_json(&v).unwrap();
        assert_eq!(back.c, op.c);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        for text in [
            "[]",
            "{\"coeffs\": 3}",
            "{\"step\": 0, \"coeffs\": []}",
            "{\"step\": 1, \"coeffs\": [[0, [[0, [[0, \"1/0\"]]]]]]}",
            "{\"step\": 1, \"coeffs\": [[0, [[0, [[0, \"x\"]]]]]]}",
        ] {
            let v: Value = serde_json::from_str(text).unwrap();
            assert!(matches!(qdiff_from_json(&v), Err(OpalgError::BadOperatorJson(_))));
        }
        let v: Value = serde_json::from_str("{\"coeffs\": [[0, {\"num\": [], \"den\": []}]]}").unwrap();
        assert!(matches!(weyl_from_json(&v), Err(OpalgError::BadOperatorJson(_))));
    }
}
