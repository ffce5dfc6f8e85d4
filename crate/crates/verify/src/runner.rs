use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use crate::config::{Config, ConfigError};
use crate::context::Context;
use crate::registry::{registry, select, CheckDescriptor, CheckKind};
use crate::report::{CheckResult, Status, VerificationReport};

/// Validates `config`, then runs every check whose id matches `pattern`.
///
/// Failures and panics inside a check are recorded, never propagated.
pub fn run_suite(pattern: &str, config: &Config) -> Result<VerificationReport, ConfigError> {
    let twist = config.validate()?;
    let all = registry(config);
    let chosen = select(&all, pattern);
    if chosen.is_empty() {
        return Ok(VerificationReport::new(pattern, config, Vec::new()));
    }
    let ctx = Context::build(config, twist);
    let results = config.exec.map(&chosen, |d| run_one(d, &ctx));
    Ok(VerificationReport::new(pattern, config, results))
}

fn run_one(d: &CheckDescriptor, ctx: &Context) -> CheckResult {
    let mut result = CheckResult {
        id: d.id.clone(),
        anchor: d.anchor.clone(),
        section: d.section,
        control: d.control.is_some(),
        status: Status::Skipped,
        witness: Vec::new(),
        ms: 0,
    };
    let producer = match &d.kind {
        CheckKind::OutOfScope(reason) => {
            result.witness.push(format!("out of scope: {reason}"));
            return result;
        }
        CheckKind::Run(f) => f,
    };
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| producer(ctx)));
    result.ms = start.elapsed().as_millis() as u64;
    match outcome {
        Err(_) => {
            result.status = Status::Error;
            result.witness.push("check panicked".into());
        }
        Ok(Err(e)) => {
            result.status = Status::Error;
            result.witness.push(format!("error: {e}"));
        }
        Ok(Ok(cert)) => {
            result.witness = cert.witness;
            result.status = match &d.control {
                None if cert.passed => Status::Pass,
                None => Status::Fail,
                Some(_) if cert.passed => {
                    result.witness.push("control did not fail".into());
                    Status::Fail
                }
                Some(expect) => {
                    let reason = cert.failure.unwrap_or_default();
                    if reason.contains(expect.as_str()) {
                        result.witness.push(format!("failed as asserted ({expect:?})"));
                        Status::Pass
                    } else {
                        result.witness.push(format!("failed for the wrong reason, expected {expect:?}"));
                        Status::Fail
                    }
                }
            };
        }
    }
    result
}
