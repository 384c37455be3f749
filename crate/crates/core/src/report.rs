//! Structured verification certificates.
//!
//! Every `verify_*` operation emits one of these. The JSON encoding is
//! stable: field order is fixed, maps are ordered, and `runtime_ms` is a
//! sidecar measurement that consumers exclude when comparing certificates
//! byte for byte.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl ReportParams {
    pub fn for_n(n: usize) -> Self {
        ReportParams {
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn for_w(w: usize) -> Self {
        ReportParams {
            w: Some(w),
            ..Default::default()
        }
    }

    pub fn text(&self) -> String {
        let mut pieces = Vec::new();
        if let Some(n) = self.n {
            pieces.push(format!("n={n}"));
        }
        if let Some(w) = self.w {
            pieces.push(format!("w={w}"));
        }
        if let Some(core) = &self.core {
            pieces.push(format!("core={core}"));
        }
        if let Some(variant) = &self.variant {
            pieces.push(format!("variant={variant}"));
        }
        pieces.join(" ")
    }
}

/// Witness data backing a pass/fail verdict. Sub-check outcomes are encoded
/// in `counts` as 0/1 entries prefixed with `check_`.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Witnesses {
    pub counts: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signs: Option<BTreeMap<String, i8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hnf_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<[String; 2]>,
}

impl Witnesses {
    pub fn count(&mut self, key: &str, value: i64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn check(&mut self, key: &str, ok: bool) {
        self.counts.insert(format!("check_{key}"), i64::from(ok));
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub params: ReportParams,
    pub passed: bool,
    pub witnesses: Witnesses,
    pub runtime_ms: u128,
}

impl VerificationReport {
    pub fn new(claim: &str, params: ReportParams) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            params,
            passed: false,
            witnesses: Witnesses::default(),
            runtime_ms: 0,
        }
    }

    /// Pass/fail line for terminal output.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{verdict} {} {}", self.claim, self.params.text());
        if !self.passed {
            let failed: Vec<&str> = self
                .witnesses
                .counts
                .iter()
                .filter(|(k, &v)| k.starts_with("check_") && v == 0)
                .map(|(k, _)| k.as_str())
                .collect();
            if !failed.is_empty() {
                line.push_str(&format!(" [{}]", failed.join(", ")));
            }
            if let Some([a, b]) = &self.witnesses.failing_pair {
                line.push_str(&format!(" witness=({a}, {b})"));
            }
        }
        line
    }

    fn sort_key(&self) -> (String, ReportParams) {
        (self.claim.clone(), self.params.clone())
    }
}

/// Deterministic merge order: claim id, then parameters.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by_key(VerificationReport::sort_key);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_order_is_stable() {
        let mut r = VerificationReport::new("demo", ReportParams::for_n(5));
        r.passed = true;
        r.witnesses.count("members", 3);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"claim":"demo","params":{"n":5},"passed":true,"witnesses":{"counts":{"members":3}},"runtime_ms":0}"#
        );
    }

    #[test]
    fn summary_lists_failed_checks() {
        let mut r = VerificationReport::new("demo", ReportParams::for_w(2));
        r.witnesses.check("cardinality", false);
        r.witnesses.check("lattice_equality", true);
        assert_eq!(r.summary_line(), "FAIL demo w=2 [check_cardinality]");
    }

    #[test]
    fn deterministic_sorting() {
        let mut reports = vec![
            VerificationReport::new("b", ReportParams::for_n(2)),
            VerificationReport::new("a", ReportParams::for_n(9)),
            VerificationReport::new("b", ReportParams::for_n(1)),
        ];
        sort_reports(&mut reports);
        let order: Vec<(String, Option<usize>)> = reports
            .iter()
            .map(|r| (r.claim.clone(), r.params.n))
            .collect();
        assert_eq!(
            order,
            vec![
                ("a".to_string(), Some(9)),
                ("b".to_string(), Some(1)),
                ("b".to_string(), Some(2)),
            ]
        );
    }
}
