//! Machine-readable verification reports.
//!
//! A report is a named suite plus a sorted list of check records. Reports are
//! deterministic for a fixed `(config, seed)`: checks are sorted by name and
//! parameters, numbers are emitted with shortest round-trip formatting, and
//! wall time is kept out of the payload unless explicitly requested.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Reported, not asserted: deviations the suite documents without
    /// treating them as implementation errors.
    Finding,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

impl CheckRecord {
    pub fn new(name: &str, status: CheckStatus, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        CheckRecord {
            name: name.to_string(),
            params: BTreeMap::new(),
            status,
            expected: expected.into(),
            actual: actual.into(),
            residual: None,
        }
    }

    /// Pass/fail from an exact boolean.
    pub fn exact(name: &str, ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckRecord::new(name, status, expected, actual)
    }

    /// Pass/fail from a residual against a tolerance.
    pub fn residual(name: &str, residual: f64, tol: f64) -> Self {
        let status = if residual.is_finite() && residual <= tol {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        let mut rec = CheckRecord::new(name, status, format!("<= {tol:e}"), format!("{residual:e}"));
        rec.residual = Some(residual);
        rec
    }

    /// A reported-not-asserted record.
    pub fn finding(name: &str, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        CheckRecord::new(name, CheckStatus::Finding, expected, actual)
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_residual(mut self, residual: f64) -> Self {
        self.residual = Some(residual);
        self
    }

    /// Error-to-record adapter: an unexpected error becomes a failing record.
    pub fn from_error(name: &str, err: &crate::error::VqError) -> Self {
        CheckRecord::new(name, CheckStatus::Fail, "no error", format!("error: {err}"))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub seed: u64,
    pub version: String,
    pub config: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub meta: ReportMeta,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64, config: BTreeMap<String, String>) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            meta: ReportMeta {
                seed,
                version: env!("CARGO_PKG_VERSION").to_string(),
                config,
                wall_time_ms: None,
            },
            checks: Vec::new(),
        }
    }

    pub fn sort_checks(&mut self) {
        self.checks.sort_by(|a, b| {
            a.name
                .cmp(&b.name)
                .then_with(|| a.params.cmp(&b.params))
        });
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    /// (pass, fail, finding)
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut p = 0;
        let mut f = 0;
        let mut d = 0;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => p += 1,
                CheckStatus::Fail => f += 1,
                CheckStatus::Finding => d += 1,
            }
        }
        (p, f, d)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// One check per row; parameters flattened to `k=v` pairs joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,name,status,params,expected,actual,residual\n");
        for c in &self.checks {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let residual = c.residual.map(|r| format!("{r:e}")).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                self.suite,
                c.name,
                status_str(c.status),
                csv_quote(&params.join(";")),
                csv_quote(&c.expected),
                csv_quote(&c.actual),
                residual
            ));
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let (p, f, d) = self.counts();
        let mut out = format!(
            "# Verification report: {}\n\nseed {} | {} pass, {} fail, {} findings\n\n",
            self.suite, self.meta.seed, p, f, d
        );
        out.push_str("| check | params | status | expected | actual | residual |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for c in &self.checks {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let residual = c.residual.map(|r| format!("{r:e}")).unwrap_or_default();
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                c.name,
                params.join("; "),
                status_str(c.status),
                md_escape(&c.expected),
                md_escape(&c.actual),
                residual
            ));
        }
        out
    }
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Finding => "finding",
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// FNV-1a hash of the check name, mixed with the master seed: every check
/// draws from its own stream, so execution order and worker count cannot
/// change any sampled value.
pub fn derive_seed(master: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ master
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip_and_counts() {
        let mut r = VerificationReport::new("demo", 7, BTreeMap::new());
        r.checks.push(CheckRecord::exact("b.second", true, "1", "1"));
        r.checks.push(CheckRecord::residual("a.first", 1e-10, 1e-8));
        r.checks.push(CheckRecord::finding("c.third", "x", "y"));
        r.sort_checks();
        assert_eq!(r.checks[0].name, "a.first");
        assert_eq!(r.counts(), (2, 0, 1));
        assert!(!r.any_fail());

        let json = r.to_json();
        assert!(json.contains("\"suite\": \"demo\""));
        assert!(!json.contains("wall_time_ms"));

        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 4);

        let md = r.to_markdown();
        assert!(md.contains("2 pass, 0 fail, 1 findings"));
    }

    #[test]
    fn failing_residual_marks_fail() {
        let rec = CheckRecord::residual("x", 1.0, 1e-8);
        assert_eq!(rec.status, CheckStatus::Fail);
        let nan = CheckRecord::residual("y", f64::NAN, 1e-8);
        assert_eq!(nan.status, CheckStatus::Fail);
    }

    #[test]
    fn derived_seeds_differ_by_name() {
        assert_ne!(derive_seed(42, "a"), derive_seed(42, "b"));
        assert_eq!(derive_seed(42, "a"), derive_seed(42, "a"));
    }
}
