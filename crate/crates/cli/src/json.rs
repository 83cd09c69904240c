//! JSON encodings. Every number is exact: rationals are `"p/q"` strings and
//! quadratic-field elements are `{"a": "p/q", "b": "p/q", "d": int}`.

use chm_core::arith::{format_rational, parse_rational, BiQuad, QuadExt};
use chm_core::audit::AuditResult;
use chm_core::classify::{CandidateSolution, ClassificationReport, LmsEvaluation};
use chm_core::hadamard::{CoreWeights, GramOutcome, SpectralOutcome};
use chm_core::poly::RatPoly;
use chm_core::srg::SrgParams;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const TOOL_VERSION: &str = concat!("chm ", env!("CARGO_PKG_VERSION"));

/// Output envelope of `verify`, `classify`, `scan`, `audit` and `sturm`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: String,
    pub inputs: Value,
    pub result: Value,
    pub tool_version: String,
    /// All arithmetic behind `result` was exact.
    pub exact: bool,
}

impl Certificate {
    pub fn new(kind: &str, inputs: Value, result: Value) -> Self {
        Self {
            kind: kind.into(),
            inputs,
            result,
            tool_version: TOOL_VERSION.into(),
            exact: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadJson {
    pub a: String,
    pub b: String,
    pub d: i64,
}

impl From<&QuadExt> for QuadJson {
    fn from(x: &QuadExt) -> Self {
        Self {
            a: format_rational(x.a()),
            b: format_rational(x.b()),
            d: x.d(),
        }
    }
}

impl TryFrom<QuadJson> for QuadExt {
    type Error = String;
    fn try_from(j: QuadJson) -> Result<Self, String> {
        let a = parse_rational(&j.a).map_err(|e| e.to_string())?;
        let b = parse_rational(&j.b).map_err(|e| e.to_string())?;
        if j.d == 0 && b != rational(0) {
            return Err(format!("b = {} needs a nonzero d", j.b));
        }
        QuadExt::new(a, b, j.d).map_err(|e| e.to_string())
    }
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn quad(x: &QuadExt) -> Value {
    serde_json::to_value(QuadJson::from(x)).expect("plain struct")
}

pub fn quad_from_value(v: &Value) -> Result<QuadExt, String> {
    let j: QuadJson = serde_json::from_value(v.clone()).map_err(|e| format!("bad field element {v}: {e}"))?;
    QuadExt::try_from(j)
}

pub fn rat(q: &BigRational) -> Value {
    Value::String(format_rational(q))
}

/// Elements of a biquadratic tower collapse to one field element when they
/// can; otherwise both components and the outer discriminant are listed.
pub fn biquad(x: &BiQuad) -> Value {
    match x.to_quad() {
        Some(q) => quad(&q),
        None => json!({ "lo": quad(x.lo()), "hi": quad(x.hi()), "e": x.e() }),
    }
}

pub fn poly(p: &RatPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rat).collect())
}

pub fn weights(w: &CoreWeights) -> Value {
    Value::Array(w.w().iter().map(quad).collect())
}

pub fn weights_from_value(v: &Value) -> Result<CoreWeights, String> {
    let arr = v.as_array().filter(|a| a.len() == 3).ok_or("weights must be an array of 3 field elements")?;
    let [a, b, c] = [&arr[0], &arr[1], &arr[2]].map(quad_from_value);
    CoreWeights::new(a?, b?, c?).map_err(|e| e.to_string())
}

pub fn matrix(rows: &[Vec<QuadExt>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(quad).collect())).collect())
}

pub fn matrix_from_value(v: &Value) -> Result<Vec<Vec<QuadExt>>, String> {
    let rows = v.as_array().ok_or("matrix must be an array of rows")?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| "each row must be an array".to_string())?
                .iter()
                .map(quad_from_value)
                .collect()
        })
        .collect()
}

pub fn params(p: &SrgParams) -> Value {
    json!({
        "n": p.n,
        "k1": p.k1,
        "k2": p.k2,
        "lambda": p.lambda,
        "mu": p.mu,
        "r": quad(&p.r),
        "s": quad(&p.s),
        "m1": rat(&p.m1),
        "m2": rat(&p.m2),
        "conference": p.is_conference(),
        "complemented": p.complemented,
    })
}

pub fn gram(outcome: &GramOutcome) -> Value {
    match outcome {
        GramOutcome::Hadamard { order, discriminant } => {
            json!({ "status": "hadamard", "order": order, "discriminant": discriminant })
        }
        GramOutcome::NonUnitEntry { row, col, abs_sq } => json!({
            "status": "not-hadamard",
            "first_violation": { "kind": "non-unit-entry", "row": row, "col": col, "abs_sq": quad(abs_sq) },
        }),
        GramOutcome::Violation { row, other, inner } => json!({
            "status": "not-hadamard",
            "first_violation": { "kind": "inner-product", "row": row, "other": other, "inner": quad(inner) },
        }),
    }
}

pub fn spectral(outcome: &SpectralOutcome) -> Value {
    match outcome {
        SpectralOutcome::Pass => json!({ "status": "pass" }),
        SpectralOutcome::Fail { k, value } => json!({ "status": "fail", "k": k, "value": biquad(value) }),
    }
}

fn lms(e: &LmsEvaluation) -> Value {
    json!({
        "L": poly(&e.l),
        "M": poly(&e.m),
        "S": poly(&e.s),
        "L_k1": rat(&e.lk),
        "M_k1": rat(&e.mk),
        "S_k1": rat(&e.sk),
        "h": quad(&e.h),
        "beta_plus": quad(&e.beta_plus),
        "delta": quad(&e.delta),
        "special_form": e.special.map(|f| format!("{f:?}")),
    })
}

fn candidate(c: &CandidateSolution) -> Value {
    json!({
        "branch": c.branch.to_string(),
        "real_parts": c.a.iter().map(quad).collect::<Vec<_>>(),
        "lifts": c.lifts.iter().map(|l| json!({
            "signs": l.signs,
            "weights": weights(&l.weights),
            "verified": l.verified,
        })).collect::<Vec<_>>(),
        "unresolved": c.unresolved,
    })
}

/// Full report of one tuple; `oracle` is `None` when the closed form agrees.
pub fn report(r: &ClassificationReport, oracle: Option<&str>) -> Value {
    json!({
        "params": params(&r.params),
        "solutions": r.solutions.iter().map(|s| json!({
            "family": s.family.map(|f| f.name()),
            "weights": weights(&s.weights),
        })).collect::<Vec<_>>(),
        "filters": r.filters_fired.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "lms": r.lms.as_ref().map(lms),
        "candidates": r.candidates.iter().map(candidate).collect::<Vec<_>>(),
        "oracle": match oracle {
            None => json!({ "agrees": true }),
            Some(detail) => json!({ "agrees": false, "detail": detail }),
        },
    })
}

pub fn audit(r: &AuditResult) -> Value {
    json!({
        "id": r.id,
        "grid": r.grid,
        "checked": r.checked,
        "passed": r.passed(),
        "failure": r.failure.as_ref().map(|f| json!({ "point": f.point, "witness": f.witness })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use chm_core::arith::rat as q;

    #[test]
    fn field_element_round_trip() {
        let x = QuadExt::new(q(-1, 3), q(5, 2), -15).unwrap();
        let v = quad(&x);
        assert_eq!(v, json!({ "a": "-1/3", "b": "5/2", "d": -15 }));
        assert_eq!(quad_from_value(&v).unwrap(), x);
        assert!(quad_from_value(&json!({ "a": "1/1", "b": "1/1", "d": 0 })).is_err());
        assert!(quad_from_value(&json!({ "a": "1/1", "b": "1/1", "d": 4 })).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let c = Certificate::new("sturm", json!({ "poly": ["1/1"] }), json!({ "count": 0 }));
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<Certificate>(&text).unwrap(), c);
    }
}
