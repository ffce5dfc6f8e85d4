//! One line per acceptance criterion; exits nonzero if any fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use g2rat_core::exec::Exec;
use g2rat_core::g2::{build_weight_table, synthesize_weyl_group};
use g2rat_verify::report::CheckResult;
use g2rat_verify::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn(&VerificationReport) -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn check<'a>(r: &'a VerificationReport, id: &str) -> Result<&'a CheckResult, String> {
    r.get(id).ok_or_else(|| format!("{id} not in report"))
}

fn passes(r: &VerificationReport, id: &str) -> Outcome {
    let c = check(r, id)?;
    ensure(c.status == Status::Pass, format!("{id} is {}", c.status))
}

fn witnessed(r: &VerificationReport, id: &str, needle: &str) -> Outcome {
    passes(r, id)?;
    ensure(check(r, id)?.witness.iter().any(|w| w.contains(needle)), format!("{id} lacks witness {needle:?}"))
}

fn all_pass(r: &VerificationReport, prefix: &str, controls: bool) -> Result<usize, String> {
    let chosen: Vec<&CheckResult> = r.checks.iter().filter(|c| c.id.starts_with(prefix) && c.control == controls).collect();
    for c in &chosen {
        passes(r, &c.id)?;
    }
    ensure(!chosen.is_empty(), format!("no checks under {prefix}"))?;
    Ok(chosen.len())
}

fn weyl(r: &VerificationReport) -> Outcome {
    for id in ["weyl.weights", "weyl.group", "weyl.induced-action"] {
        passes(r, id)?;
    }
    // recomputed outside the suite
    let g = synthesize_weyl_group(&build_weight_table(), Exec::Sequential).map_err(|e| e.to_string())?;
    ensure(g.order() == 12, format!("|W| = {}", g.order()))?;
    ensure(!g.is_abelian(), "W is abelian")?;
    ensure(g.center().len() == 2, format!("center has order {}", g.center().len()))?;
    ensure(g.antipodal().is_some(), "no antipodal element")
}

fn quotient(r: &VerificationReport) -> Outcome {
    witnessed(r, "quotient.generators", "index 1")?;
    let w = &check(r, "quotient.generators")?.witness;
    let count = |needle: &str| w.iter().filter(|l| l.contains(needle)).count();
    ensure(count("has weight 0") == 5, "five invariant generators")?;
    ensure(count("relation ") == 2, "two relations")?;
    for x in ["x7 =", "x6 =", "x5 =", "x3 ="] {
        ensure(count(x) == 1, format!("recovery {x} missing"))?;
    }
    Ok(())
}

fn chain(r: &VerificationReport) -> Outcome {
    let n = all_pass(r, "lambda-chain.", false)?;
    for link in ["lambda1-lambda2", "lambda2-lambda3", "lambda3-lambda4"] {
        passes(r, &format!("lambda-chain.{link}.well-defined"))?;
        passes(r, &format!("lambda-chain.{link}.birational"))?;
    }
    passes(r, "lambda-chain.cremona.involution")?;
    passes(r, "lambda-chain.equivariance")?;
    ensure(n >= 9, format!("only {n} chain checks"))
}

fn smoothness(r: &VerificationReport) -> Outcome {
    for p in ["0", "2", "3", "5", "7"] {
        passes(r, &format!("smooth.lambda4.char-{p}"))?;
    }
    witnessed(r, "smooth.lambda4.char-2", "radical vector (1,1,1,0,0) with q = 1")?;
    passes(r, "smooth.neg.degenerate")
}

fn differential(r: &VerificationReport) -> Outcome {
    witnessed(r, "prop1.jacobi", "Jacobi identity")?;
    let ids = ["prop1.generic", "prop1.rational", "prop1.char-2", "prop1.char-3", "prop1.char-5", "prop1.char-7", "prop1.char-11"];
    for id in ids {
        witnessed(r, id, "rank ad(x) = 12")?;
        witnessed(r, id, "[x,g] ∩ t = 0")?;
        witnessed(r, id, "[x,g] + t = g")?;
    }
    Ok(())
}

fn freeness(r: &VerificationReport) -> Outcome {
    witnessed(r, "freeness.chart", "elementary divisors (1,1)")?;
    witnessed(r, "freeness.neg.doubled", "elementary divisors (2,2)")
}

fn twisting(r: &VerificationReport) -> Outcome {
    ensure(r.config.cubic == [-2, 0, 0, 1] && r.config.quadratic == [-5, 0, 1], "not the default torsor")?;
    all_pass(r, "twist.", false)?;
    witnessed(r, "twist.degree3-point", "= 0")?;
    witnessed(r, "twist.springer", "= 0 rechecked")?;
    witnessed(r, "twist.stereographic", "birational")?;
    witnessed(r, "twist.springer.branch-two", "descent took branch (ii)")?;
    witnessed(r, "twist.springer.branch-two", "oracle:")
}

fn invariants(r: &VerificationReport) -> Outcome {
    for needle in ["deg f2 = 2", "deg f6 = 6", "f2 invariant under all 12", "f6 invariant under all 12", "2 * 6 = |W| = 12"] {
        witnessed(r, "invariants.reynolds", needle)?;
    }
    let det = check(r, "invariants.reynolds")?.witness.iter().find(|w| w.starts_with("det ")).cloned().unwrap_or_default();
    ensure(!det.ends_with("= 0"), format!("Jacobian vanishes: {det}"))
}

fn falsifiability(r: &VerificationReport) -> Outcome {
    let controls: Vec<&CheckResult> = r.checks.iter().filter(|c| c.control).collect();
    ensure(controls.len() >= 8, format!("only {} negative controls", controls.len()))?;
    for c in &controls {
        passes(r, &c.id)?;
        ensure(c.witness.iter().any(|w| w.starts_with("failed as asserted")), format!("{} did not fail as asserted", c.id))?;
    }
    // a control that stops failing must sink the suite
    let mut flipped = r.checks.clone();
    let k = flipped.iter().position(|c| c.control).unwrap();
    flipped[k].status = Status::Fail;
    ensure(VerificationReport::new(&r.pattern, &r.config, flipped).overall == "fail", "flipped control leaves the suite passing")
}

fn determinism(r: &VerificationReport) -> Outcome {
    let again = run_suite("*", &Config { exec: Exec::Sequential, ..Config::default() }).map_err(|e| e.to_string())?;
    ensure(emit_json(&r.without_timing()) == emit_json(&again.without_timing()), "JSON reports differ")?;
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/default_report.md");
    let text = std::fs::read_to_string(&golden).map_err(|e| format!("{}: {e}", golden.display()))?;
    ensure(emit_markdown(r) == text, "markdown differs from the golden file")
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = run_suite("*", &Config::default()).expect("default config is valid");
    let criteria: [Criterion; 10] = [
        ("weyl synthesis", weyl),
        ("quotient certification", quotient),
        ("lambda chain", chain),
        ("smoothness", smoothness),
        ("adjoint differential", differential),
        ("generic freeness", freeness),
        ("twisting and springer descent", twisting),
        ("invariant theory", invariants),
        ("falsifiability", falsifiability),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f(&report) {
            Ok(()) => println!("criterion {:>2} {name}: PASS", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({e})", i + 1);
            }
        }
    }
    println!("acceptance: {}/10 passed in {:.1}s", 10 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
