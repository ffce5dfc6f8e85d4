use std::collections::HashSet;
use std::path::PathBuf;

use g2rat_core::exec::Exec;
use g2rat_verify::registry::{matches, CheckKind};
use g2rat_verify::*;

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/default_report.md")
}

#[test]
fn json_round_trips() {
    let r = run_suite("weyl.*,freeness.*", &Config::default()).unwrap();
    assert_eq!(r.totals.checks, 6);
    let back = parse_json(&emit_json(&r)).unwrap();
    assert_eq!(back, r);
}

#[test]
fn empty_selection_is_vacuous() {
    let r = run_suite("no-such-check", &Config::default()).unwrap();
    assert_eq!(r.overall, "pass-vacuous");
    assert!(r.passed());
    assert!(emit_markdown(&r).contains("0 checks"));
    assert_eq!(parse_json(&emit_json(&r)).unwrap(), r);
}

#[test]
fn composite_prime_is_a_usage_error() {
    let config = Config { prop1_primes: vec![2, 9], ..Config::default() };
    assert_eq!(run_suite("*", &config).unwrap_err(), ConfigError::NotPrime(9));
    let config = Config { cubic: vec![0, 0, 0, 1], ..Config::default() };
    assert!(matches!(run_suite("*", &config), Err(ConfigError::BadTorsor(_))));
}

#[test]
fn coefficient_lists_parse() {
    assert_eq!(parse_coefficients("-2, 0,0,1").unwrap(), vec![-2, 0, 0, 1]);
    assert!(parse_coefficients("1,x").is_err());
}

#[test]
fn registry_ids_are_unique_and_anchored() {
    let all = registry(&Config::default());
    let mut seen = HashSet::new();
    for d in &all {
        assert!(seen.insert(d.id.clone()), "duplicate id {}", d.id);
        assert!(!d.anchor.is_empty(), "{} has no anchor", d.id);
        if d.section == Section::Properties {
            assert_eq!(d.anchor, "plumbing", "{}", d.id);
        }
        if let CheckKind::OutOfScope(_) = d.kind {
            assert_eq!(d.section, Section::OutOfScope);
        }
    }
    for section in Section::ALL {
        assert!(all.iter().any(|d| d.section == section), "{section:?} has no checks");
    }
}

#[test]
fn glob_patterns() {
    assert!(matches("*", "twist.springer"));
    assert!(matches("weyl.*,twist.*", "twist.springer"));
    assert!(matches("prop1.char-*", "prop1.char-11"));
    assert!(!matches("prop1.char-*", "prop1.generic"));
    assert!(!matches("", "prop1.generic"));
}

#[test]
fn strategies_give_identical_reports() {
    let pattern = "weyl.*,prop1.jacobi,twist.springer*";
    let par = run_suite(pattern, &Config::default()).unwrap();
    let seq = run_suite(pattern, &Config { exec: Exec::Sequential, ..Config::default() }).unwrap();
    assert_eq!(emit_json(&par.without_timing()), emit_json(&seq.without_timing()));
}

/// Regenerate with `G2RAT_UPDATE_GOLDEN=1 cargo test -p g2rat-verify --test report`.
#[test]
fn default_markdown_matches_golden() {
    let md = emit_markdown(&run_suite("*", &Config::default()).unwrap());
    let path = golden_path();
    if std::env::var_os("G2RAT_UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &md).unwrap();
    }
    let golden = std::fs::read_to_string(&path).expect("golden file missing; run with G2RAT_UPDATE_GOLDEN=1");
    assert!(md == golden, "markdown report differs from {}", path.display());
}
