use serde::Serialize;
use torus_ideals::verdict::{Failure, Verdict};

use crate::render;
use crate::Format;

/// Failures listed in full before the rest are only counted.
const SHOWN_FAILURES: usize = 50;

#[derive(Clone, Debug, Serialize)]
pub struct VerifySuiteReport {
    pub suite: String,
    pub range: String,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
    /// Observations that are not pass/fail, e.g. which n hit a special family.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerifySuiteReport {
    pub fn new(suite: &str, range: String) -> Self {
        Self {
            suite: suite.into(),
            range,
            passed: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn add(&mut self, v: Verdict) {
        let failed = v.failures.len() as u64;
        self.failed += failed;
        self.passed += v.cases.saturating_sub(failed);
        let check = v.check;
        self.failures.extend(v.failures.into_iter().map(|mut f| {
            f.case = format!("{check}: {}", f.case);
            f
        }));
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub fn render(reports: &[VerifySuiteReport], format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => {
            if let [one] = reports {
                render::json(one)
            } else {
                render::json(reports)
            }
        }
        Format::Csv => render::csv(
            &["suite", "range", "passed", "failed"],
            reports.iter().map(|r| {
                [
                    r.suite.clone(),
                    r.range.clone(),
                    r.passed.to_string(),
                    r.failed.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let status = if r.ok() { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status} {} ({}): {} passed, {} failed\n",
                    r.suite, r.range, r.passed, r.failed
                ));
                for note in &r.notes {
                    out.push_str(&format!("  note: {note}\n"));
                }
                for f in r.failures.iter().take(SHOWN_FAILURES) {
                    out.push_str(&format!(
                        "  {}: expected {}, got {}\n",
                        f.case, f.expected, f.actual
                    ));
                }
                if r.failures.len() > SHOWN_FAILURES {
                    out.push_str(&format!("  ... {} more\n", r.failures.len() - SHOWN_FAILURES));
                }
            }
            Ok(out)
        }
    }
}
