use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::registry::Section;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub section: Section,
    /// Negative controls pass when the underlying certificate fails as asserted.
    pub control: bool,
    pub status: Status,
    pub witness: Vec<String>,
    pub ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub pattern: String,
    pub config: Config,
    pub checks: Vec<CheckResult>,
    pub totals: Totals,
    /// `pass`, `fail`, or `pass-vacuous` when nothing was selected.
    pub overall: String,
}

impl VerificationReport {
    pub fn new(pattern: &str, config: &Config, checks: Vec<CheckResult>) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let totals =
            Totals { checks: checks.len(), pass: count(Status::Pass), fail: count(Status::Fail), error: count(Status::Error), skipped: count(Status::Skipped) };
        let overall = if totals.checks == 0 {
            "pass-vacuous"
        } else if totals.fail + totals.error == 0 {
            "pass"
        } else {
            "fail"
        };
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            pattern: pattern.to_string(),
            config: config.clone(),
            checks,
            totals,
            overall: overall.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.overall != "fail"
    }

    /// The same report with every timing zeroed.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.ms = 0;
        }
        r
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

pub fn emit_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => emit_json(r),
        Format::Markdown => emit_markdown(r),
    }
}

pub fn emit_json(r: &VerificationReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

pub fn parse_json(s: &str) -> Result<VerificationReport, serde_json::Error> {
    serde_json::from_str(s)
}

/// Grouped by section, without timings.
pub fn emit_markdown(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# G2 rationality verification report\n");
    let _ = writeln!(out, "- version: {}", r.version);
    let _ = writeln!(out, "- pattern: `{}`", r.pattern);
    let _ = writeln!(out, "- seed: {}", r.config.seed);
    let _ = writeln!(out, "- torsor: cubic [{}], quadratic [{}]", join(&r.config.cubic), join(&r.config.quadratic));
    let _ = writeln!(out, "- characteristics: differential [{}], smoothness [{}]", join(&r.config.prop1_primes), join(&r.config.smooth_primes));
    let t = &r.totals;
    let _ = writeln!(out, "- overall: **{}** ({} checks: {} pass, {} fail, {} error, {} skipped)", r.overall, t.checks, t.pass, t.fail, t.error, t.skipped);
    for section in Section::ALL {
        let rows: Vec<&CheckResult> = r.checks.iter().filter(|c| c.section == section).collect();
        if rows.is_empty() {
            continue;
        }
        let _ = writeln!(out, "\n## {}\n", section.title());
        for c in rows {
            let tag = if c.control { " (negative control)" } else { "" };
            let _ = writeln!(out, "### `{}`: {}{tag}\n", c.id, c.status);
            let _ = writeln!(out, "_{}_\n", c.anchor);
            for w in &c.witness {
                let _ = writeln!(out, "- {w}");
            }
            if !c.witness.is_empty() {
                out.push('\n');
            }
        }
    }
    while out.ends_with("\n\n") {
        out.pop();
    }
    out
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
