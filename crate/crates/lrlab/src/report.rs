//! Structured verification reports.
//!
//! One [`VerificationReport`] covers one parameter tuple (m, n, k, l). Each
//! named check carries a [`Status`] and an optional human-readable detail.
//! The overall verdict is true exactly when no check failed; skipped checks
//! and domain violations do not count against it.
//!
//! Reports serialize to JSON with sorted check keys and no volatile fields,
//! so two runs over the same input produce byte-identical output. Timings
//! are opt-in and excluded from the serialized report unless requested.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Schema tag embedded in every report.
pub const REPORT_SCHEMA: &str = "lrlab-report/1";

/// Outcome of a single named check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    DomainViolation,
}

impl Status {
    /// Only `fail` counts against the verdict.
    pub fn is_failing(self) -> bool {
        matches!(self, Status::Fail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::DomainViolation => "domain-violation",
        };
        write!(f, "{s}")
    }
}

/// One check result with optional detail text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass() -> Self {
        Check {
            status: Status::Pass,
            detail: None,
        }
    }

    pub fn pass_with(detail: impl Into<String>) -> Self {
        Check {
            status: Status::Pass,
            detail: Some(detail.into()),
        }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Check {
            status: Status::Fail,
            detail: Some(detail.into()),
        }
    }

    pub fn skipped(detail: impl Into<String>) -> Self {
        Check {
            status: Status::Skipped,
            detail: Some(detail.into()),
        }
    }

    pub fn domain_violation(detail: impl Into<String>) -> Self {
        Check {
            status: Status::DomainViolation,
            detail: Some(detail.into()),
        }
    }

    pub fn from_bool(ok: bool, fail_detail: impl Into<String>) -> Self {
        if ok {
            Check::pass()
        } else {
            Check::fail(fail_detail)
        }
    }
}

/// All check results for one parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub l: u32,
    pub degree_bound: u32,
    pub checks: BTreeMap<String, Check>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl VerificationReport {
    /// Assembles a report; the verdict is derived from the checks.
    pub fn new(
        m: u32,
        n: u32,
        k: u32,
        l: u32,
        degree_bound: u32,
        checks: BTreeMap<String, Check>,
        timings_ms: Option<BTreeMap<String, u64>>,
    ) -> Self {
        let verdict = !checks.values().any(|c| c.status.is_failing());
        VerificationReport {
            schema: REPORT_SCHEMA.to_string(),
            m,
            n,
            k,
            l,
            degree_bound,
            checks,
            verdict,
            timings_ms,
        }
    }

    /// Keys of failing checks, in sorted order.
    pub fn failing_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, c)| c.status.is_failing())
            .map(|(k, _)| k.as_str())
            .collect()
    }

    fn status_counts(&self) -> (usize, usize, usize, usize) {
        let mut counts = (0, 0, 0, 0);
        for c in self.checks.values() {
            match c.status {
                Status::Pass => counts.0 += 1,
                Status::Fail => counts.1 += 1,
                Status::Skipped => counts.2 += 1,
                Status::DomainViolation => counts.3 += 1,
            }
        }
        counts
    }

    /// Multi-line human-readable rendering. Failures and domain violations
    /// are listed with their detail; skipped checks are compacted to one
    /// line of keys.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let (pass, fail, skipped, dv) = self.status_counts();
        let verdict = if self.verdict { "ok" } else { "FAIL" };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "(m, n, k, l) = ({}, {}, {}, {}), degree bound {}: {} \
             [pass {}, fail {}, skipped {}, domain-violation {}]",
            self.m, self.n, self.k, self.l, self.degree_bound, verdict, pass, fail, skipped, dv
        );
        for (key, check) in &self.checks {
            if matches!(check.status, Status::Fail | Status::DomainViolation) {
                let detail = check.detail.as_deref().unwrap_or("");
                let _ = writeln!(out, "  {key}: {}{}{}", check.status,
                    if detail.is_empty() { "" } else { " - " }, detail);
            }
        }
        if skipped > 0 {
            let keys: Vec<&str> = self
                .checks
                .iter()
                .filter(|(_, c)| c.status == Status::Skipped)
                .map(|(k, _)| k.as_str())
                .collect();
            let _ = writeln!(out, "  skipped ({}): {}", skipped, keys.join(", "));
        }
        out
    }
}
