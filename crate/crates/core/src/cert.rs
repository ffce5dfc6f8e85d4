//! Pass/fail records with the witnesses that justify them.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub witness: Vec<String>,
    /// First failure reason, if any.
    pub failure: Option<String>,
}

impl Certificate {
    pub fn new(name: impl Into<String>) -> Self {
        Certificate { name: name.into(), passed: true, witness: Vec::new(), failure: None }
    }

    pub fn record(&mut self, line: impl Into<String>) {
        self.witness.push(line.into());
    }

    pub fn fail(&mut self, reason: impl Into<String>) {
        let reason = reason.into();
        self.witness.push(format!("FAIL {reason}"));
        if self.passed {
            self.failure = Some(reason);
        }
        self.passed = false;
    }

    /// Records `ok` when `cond` holds, otherwise fails with `reason`.
    pub fn require(&mut self, cond: bool, ok: impl Into<String>, reason: impl Into<String>) -> bool {
        if cond {
            self.record(ok);
        } else {
            self.fail(reason);
        }
        cond
    }

    /// Merges a sub-certificate, prefixing its lines with its name.
    pub fn absorb(&mut self, sub: Certificate) {
        for line in sub.witness {
            self.witness.push(format!("{}: {line}", sub.name));
        }
        if !sub.passed {
            let reason = format!("{}: {}", sub.name, sub.failure.unwrap_or_default());
            if self.passed {
                self.failure = Some(reason);
            }
            self.passed = false;
        }
    }

    pub fn failed(name: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut c = Self::new(name);
        c.fail(reason);
        c
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]", self.name, if self.passed { "pass" } else { "fail" })?;
        for w in &self.witness {
            writeln!(f, "  {w}")?;
        }
        Ok(())
    }
}
