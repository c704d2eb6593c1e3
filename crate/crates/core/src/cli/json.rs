//! Canonical JSON encodings. Object keys are sorted; integers beyond 53 bits
//! are emitted as decimal strings.

use serde_json::{json, Map, Value};

use crate::arith::{Int, LaurentPoly, MultiPoly, Rat};
use crate::cobar::{CobarElem, RElem};
use crate::fgl::BetaVec;
use crate::hopf::{HElem, TensorH};
use crate::numpoly::NumPoly;
use crate::report::Report;

const SAFE: i64 = (1 << 53) - 1;

pub fn int(n: &Int) -> Value {
    match i64::try_from(n) {
        Ok(v) if (-SAFE..=SAFE).contains(&v) => json!(v),
        _ => json!(n.to_string()),
    }
}

pub fn rat(r: &Rat) -> Value {
    if r.is_integer() {
        int(&r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn binomial_terms(f: &NumPoly) -> Value {
    let m: Map<String, Value> = f.terms().map(|(n, c)| (n.to_string(), int(c))).collect();
    Value::Object(m)
}

pub fn numpoly(f: &NumPoly) -> Value {
    json!({ "basis": "binomial", "terms": binomial_terms(f) })
}

/// Elements of F print without a shift.
pub fn helem(h: &HElem) -> Value {
    let mut v = numpoly(h.numerator());
    if h.shift() > 0 {
        v["shift"] = json!(h.shift());
    }
    v
}

pub fn laurent(p: &LaurentPoly) -> Value {
    let m: Map<String, Value> = p.terms().map(|(e, c)| (e.to_string(), rat(c))).collect();
    json!({ "basis": "monomial", "terms": m })
}

pub fn tensor(t: &TensorH) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .map(|(idx, c)| json!({ "coeff": int(c), "index": idx }))
        .collect();
    json!({ "arity": t.arity(), "shifts": t.shifts(), "terms": terms })
}

pub fn relem(r: &RElem) -> Value {
    let m: Map<String, Value> = r.terms().map(|(a, c)| (a.to_string(), int(c))).collect();
    json!({ "terms": m })
}

pub fn cobar(x: &CobarElem) -> Value {
    let mut terms = Vec::new();
    for (a, t) in x.terms() {
        for (idx, c) in t.terms() {
            terms.push(json!({ "coeff": int(c), "index": idx, "shifts": t.shifts(), "u": a }));
        }
    }
    json!({ "degree": x.degree(), "terms": terms })
}

pub fn beta(x: &BetaVec) -> Value {
    let m: Map<String, Value> = x.terms().map(|(n, c)| (n.to_string(), relem(c)["terms"].clone())).collect();
    json!({ "basis": "beta", "terms": m })
}

pub fn multipoly(p: &MultiPoly) -> Value {
    let m: Map<String, Value> = p.terms().map(|(mono, c)| (mono.to_string(), int(c))).collect();
    json!({ "terms": m })
}

/// Summary of a report: counts, pass flag and the failing checks verbatim.
pub fn report_summary(r: &Report) -> Value {
    let failures: Vec<Value> = r
        .failures()
        .map(|c| json!({ "check": c.name, "detail": c.detail, "subject": c.subject }))
        .collect();
    json!({
        "checks": r.count(),
        "counterexamples": failures,
        "failed": failures.len(),
        "pass": r.passed(),
    })
}

/// Serializes with sorted keys and no trailing whitespace.
pub fn to_string(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("values serialize")
    } else {
        serde_json::to_string(v).expect("values serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int as mk, rat as mkr};

    #[test]
    fn encodings() {
        let f = NumPoly::from_terms([(1, mk(1)), (2, mk(2))]);
        assert_eq!(to_string(&numpoly(&f), false), r#"{"basis":"binomial","terms":{"1":1,"2":2}}"#);
        assert_eq!(int(&(Int::from(1u64) << 60)), json!("1152921504606846976"));
        assert_eq!(int(&mk(-5)), json!(-5));
        assert_eq!(rat(&mkr(1, 2)), json!("1/2"));
        let h = HElem::new(1, NumPoly::alpha(2));
        assert_eq!(helem(&h)["shift"], json!(1));
    }
}
