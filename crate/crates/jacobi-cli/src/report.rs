//! Machine-readable verification reports: one record per check, a stable
//! JSON schema, and deterministic bodies for identical configurations.

use serde::Serialize;

use crate::config::SuiteConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

/// Outcome of a single check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    /// Stable identifier, `suite.topic.detail`.
    pub id: String,
    /// The mathematical identity or property being checked.
    pub identity: String,
    /// FNV-1a digest of the canonical input description.
    pub inputs: String,
    /// Measured residual (0 for structural checks that hold exactly).
    pub residual: f64,
    /// Tolerance the residual is held against.
    pub tolerance: f64,
    pub status: CheckStatus,
    /// On failure: the canonical input description, for replay.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<String>,
    /// Extra context (measured side values, guard notices).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    /// Build a pass/fail record from a residual and tolerance.
    pub fn measured(id: &str, identity: &str, inputs: &str, residual: f64, tolerance: f64) -> Self {
        let pass = residual.is_finite() && residual <= tolerance;
        CheckRecord {
            id: id.to_string(),
            identity: identity.to_string(),
            inputs: fnv1a_hex(inputs),
            residual,
            tolerance,
            status: if pass {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            replay: if pass { None } else { Some(inputs.to_string()) },
            note: None,
        }
    }

    /// A check that did not run, with the reason.
    pub fn skipped(id: &str, identity: &str, note: &str) -> Self {
        CheckRecord {
            id: id.to_string(),
            identity: identity.to_string(),
            inputs: fnv1a_hex(""),
            residual: 0.0,
            tolerance: 0.0,
            status: CheckStatus::Skip,
            replay: None,
            note: Some(note.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub config: SuiteConfig,
    /// Seconds since the Unix epoch; the only field excluded from the
    /// byte-determinism contract.
    pub generated_at: u64,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(suite: &str, config: &SuiteConfig, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let summary = Summary {
            total: checks.len(),
            passed: checks.iter().filter(|c| c.status == CheckStatus::Pass).count(),
            failed: checks.iter().filter(|c| c.status == CheckStatus::Fail).count(),
            skipped: checks.iter().filter(|c| c.status == CheckStatus::Skip).count(),
        };
        Report {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            config: config.clone(),
            generated_at: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            summary,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One human line per check plus a summary block.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let flag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "SKIP",
            };
            out.push_str(&format!(
                "[{flag}] {:<38} residual {:>12.3e}  tol {:>9.1e}  {}\n",
                c.id, c.residual, c.tolerance, c.identity
            ));
            if let Some(note) = &c.note {
                out.push_str(&format!("       note: {note}\n"));
            }
        }
        out.push_str(&format!(
            "suite {}: {} checks, {} passed, {} failed, {} skipped\n",
            self.suite, self.summary.total, self.summary.passed, self.summary.failed,
            self.summary.skipped
        ));
        out
    }
}

/// FNV-1a, fixed here (rather than the standard library hasher) so digests
/// are stable across toolchain versions.
pub fn fnv1a_hex(data: &str) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in data.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}
