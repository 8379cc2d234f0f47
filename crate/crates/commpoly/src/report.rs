//! JSON rendering of reports. Scalars and polynomials are rendered through
//! the canonical text format, so exact values survive serialization and
//! identical inputs produce identical bytes.

use serde_json::{json, Value};

use crate::analyzer::{ClassificationReport, Verdict};
use crate::search::{CommuterKind, VerificationSummary};
use crate::text::{format_poly, format_scalar};

pub fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::NormalForm { .. } => "NormalForm",
        Verdict::NotCommuting { .. } => "NotCommuting",
        Verdict::DegreeOneP => "DegreeOneP",
        Verdict::ConstantQ => "ConstantQ",
        Verdict::DegenerateSingleVariable => "DegenerateSingleVariable",
        Verdict::ExactBackendInsufficient => "ExactBackendInsufficient",
    }
}

pub fn classification_to_json(report: &ClassificationReport) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("verdict".into(), json!(verdict_name(&report.verdict)));
    match &report.verdict {
        Verdict::NormalForm { lambda, n, alpha, c } => {
            obj.insert(
                "lambda".into(),
                json!({
                    "a": format_scalar(lambda.a()),
                    "b": format_scalar(lambda.b()),
                }),
            );
            obj.insert("n".into(), json!(n));
            obj.insert("alpha".into(), json!(alpha.exponents()));
            obj.insert("c".into(), json!(format_scalar(c)));
        }
        Verdict::NotCommuting { residual } => {
            obj.insert("residual".into(), json!(format_poly(residual)));
        }
        _ => {}
    }
    obj.insert(
        "diagnostics".into(),
        Value::Array(
            report
                .diagnostics
                .iter()
                .map(|d| json!({"name": d.name, "pass": d.pass}))
                .collect(),
        ),
    );
    Value::Object(obj)
}

pub fn kind_name(kind: CommuterKind) -> &'static str {
    match kind {
        CommuterKind::Constant => "constant",
        CommuterKind::SingleVariable => "single_variable",
        CommuterKind::Nondegenerate => "nondegenerate",
    }
}

/// Wall time is deliberately excluded so that identical runs produce
/// identical bytes.
pub fn summary_to_json(summary: &VerificationSummary) -> Value {
    json!({
        "total_candidates": summary.total_candidates,
        "commuting": summary
            .entries
            .iter()
            .map(|e| {
                let mut obj = serde_json::Map::new();
                obj.insert("q".into(), json!(format_poly(&e.q)));
                obj.insert("kind".into(), json!(kind_name(e.kind)));
                if let Some(rep) = &e.report {
                    obj.insert("verdict".into(), json!(verdict_name(&rep.verdict)));
                }
                Value::Object(obj)
            })
            .collect::<Vec<_>>(),
        "violations": summary.violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyzer::classify;
    use crate::poly::{MultiPoly, UniPoly};
    use crate::scalar::Scalar;
    use crate::text::parse_poly;

    #[test]
    fn normal_form_fields_present() {
        let p = UniPoly::from_multi(parse_poly("x^2+2*x", 1).unwrap()).unwrap();
        let q = parse_poly("x1*x2+x1+x2", 2).unwrap();
        let v = classification_to_json(&classify(&p, &q));
        assert_eq!(v["verdict"], "NormalForm");
        assert_eq!(v["lambda"]["a"], "1");
        assert_eq!(v["lambda"]["b"], "1");
        assert_eq!(v["n"], 2);
        assert_eq!(v["alpha"], serde_json::json!([1, 1]));
        assert_eq!(v["c"], "1");
    }

    #[test]
    fn not_commuting_reports_residual() {
        let p = UniPoly::power(2);
        let q = parse_poly("x1*x2+1", 2).unwrap();
        let v = classification_to_json(&classify(&p, &q));
        assert_eq!(v["verdict"], "NotCommuting");
        assert_eq!(v["residual"], "-2*x1*x2");
    }

    #[test]
    fn json_bytes_are_stable() {
        let p = UniPoly::power(2);
        let q = MultiPoly::monomial(2, &[1, 1], Scalar::one());
        let a = serde_json::to_string(&classification_to_json(&classify(&p, &q))).unwrap();
        let b = serde_json::to_string(&classification_to_json(&classify(&p, &q))).unwrap();
        assert_eq!(a, b);
    }
}
