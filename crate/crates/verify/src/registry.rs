use g2rat_core::arith::FieldKind;
use serde::{Deserialize, Serialize};

use crate::checks::{self, CheckResult};
use crate::config::Config;
use crate::context::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    Weyl,
    Quotient,
    Chain,
    Smoothness,
    Differential,
    Freeness,
    Invariants,
    Twisting,
    Properties,
    OutOfScope,
}

impl Section {
    pub const ALL: [Section; 10] = [
        Section::Weyl,
        Section::Quotient,
        Section::Chain,
        Section::Smoothness,
        Section::Differential,
        Section::Freeness,
        Section::Invariants,
        Section::Twisting,
        Section::Properties,
        Section::OutOfScope,
    ];

    pub fn title(self) -> &'static str {
        match self {
            Section::Weyl => "Torus weights and the Weyl group",
            Section::Quotient => "Torus quotient of the quadric",
            Section::Chain => "The chain of W-models",
            Section::Smoothness => "Smoothness of the last model",
            Section::Differential => "Adjoint differential",
            Section::Freeness => "Generic freeness",
            Section::Invariants => "Invariants on the Cartan subalgebra",
            Section::Twisting => "Twisting and descent",
            Section::Properties => "Seeded properties (plumbing)",
            Section::OutOfScope => "Not mechanized",
        }
    }
}

pub type Producer = Box<dyn Fn(&Context) -> CheckResult + Send + Sync>;

pub enum CheckKind {
    Run(Producer),
    OutOfScope(&'static str),
}

pub struct CheckDescriptor {
    pub id: String,
    pub anchor: String,
    pub section: Section,
    /// For negative controls, a substring the failure reason must contain.
    pub control: Option<String>,
    pub kind: CheckKind,
}

impl std::fmt::Debug for CheckDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckDescriptor").field("id", &self.id).field("section", &self.section).field("control", &self.control).finish()
    }
}

struct Builder(Vec<CheckDescriptor>);

impl Builder {
    fn run(&mut self, id: impl Into<String>, section: Section, anchor: &str, f: impl Fn(&Context) -> CheckResult + Send + Sync + 'static) {
        self.0.push(CheckDescriptor { id: id.into(), anchor: anchor.into(), section, control: None, kind: CheckKind::Run(Box::new(f)) });
    }

    fn control(&mut self, id: &str, section: Section, anchor: &str, expect: &str, f: impl Fn(&Context) -> CheckResult + Send + Sync + 'static) {
        self.0.push(CheckDescriptor {
            id: id.into(),
            anchor: anchor.into(),
            section,
            control: Some(expect.into()),
            kind: CheckKind::Run(Box::new(f)),
        });
    }

    fn skip(&mut self, id: &str, anchor: &str, reason: &'static str) {
        self.0.push(CheckDescriptor { id: id.into(), anchor: anchor.into(), section: Section::OutOfScope, control: None, kind: CheckKind::OutOfScope(reason) });
    }
}

/// Every check in report order. Characteristic lists come from `config`.
pub fn registry(config: &Config) -> Vec<CheckDescriptor> {
    use Section::*;
    let mut b = Builder(Vec::new());

    b.run("weyl.weights", Weyl, "weights of T on the 7-dimensional representation", checks::weights);
    b.run("weyl.group", Weyl, "W is the dihedral group of order 12 preserving the quadric", checks::weyl_group);
    b.run("weyl.induced-action", Weyl, "W acts on the invariants as S3 x S2", checks::induced_action);
    b.run("weyl.search-strategies-agree", Properties, "plumbing", checks::weyl_search_strategies);

    b.run("quotient.generators", Quotient, "invariant monomials, relations and recovery on the chart", checks::quotient_generators);
    b.control("quotient.neg.squared-generator", Quotient, "invariant monomials generate the lattice", "index 2", checks::quotient_squared_generator);
    b.control("quotient.neg.missing-generator", Quotient, "invariant monomials generate the lattice", "rank 3", checks::quotient_missing_generators);
    b.control("quotient.neg.non-invariant", Quotient, "invariant monomials are T-invariant", "weight (1,0)", checks::quotient_non_invariant);

    b.run("lambda-chain.quotient.well-defined", Chain, "the quotient map to Lambda1", checks::quotient_map_well_defined);
    for (k, name) in ["lambda1-lambda2", "lambda2-lambda3", "lambda3-lambda4"].into_iter().enumerate() {
        b.run(format!("lambda-chain.{name}.well-defined"), Chain, "birational maps between consecutive W-models", move |c| checks::link_well_defined(c, k));
        b.run(format!("lambda-chain.{name}.birational"), Chain, "birational maps between consecutive W-models", move |c| checks::link_birational(c, k));
    }
    b.run("lambda-chain.cremona.involution", Chain, "the Cremona transformation is an involution", checks::cremona_involution);
    b.run("lambda-chain.equivariance", Chain, "every map in the chain is W-equivariant", checks::chain_equivariance);
    b.control("lambda-chain.neg.forgetful-projection", Chain, "birational maps between consecutive W-models", "pulls back to nonzero remainder", checks::forgetful_projection);
    b.control("lambda-chain.neg.mismatched-action", Chain, "every map in the chain is W-equivariant", "has remainder", checks::mismatched_action);

    b.run("smooth.lambda4.char-0", Smoothness, "Lambda4 is a smooth quadric", |_| checks::lambda4_smooth(&FieldKind::Rational));
    for &p in &config.smooth_primes {
        b.run(format!("smooth.lambda4.char-{p}"), Smoothness, "Lambda4 is a smooth quadric", move |_| checks::lambda4_smooth_mod(p));
    }
    b.control("smooth.neg.degenerate", Smoothness, "Lambda4 is a smooth quadric", "singular at", |_| checks::degenerate_quadric());

    b.run("prop1.jacobi", Differential, "Chevalley basis of the Lie algebra of G2", checks::jacobi);
    b.run("prop1.generic", Differential, "the differential of the adjoint map at a regular element", checks::prop1_generic);
    b.run("prop1.rational", Differential, "the differential of the adjoint map at a regular element", checks::prop1_rational);
    for &p in &config.prop1_primes {
        b.run(format!("prop1.char-{p}"), Differential, "the differential of the adjoint map at a regular element", move |c| checks::prop1_mod(c, p));
    }
    b.control("prop1.neg.irregular", Differential, "regular elements of the Cartan subalgebra", "3a+2b", checks::prop1_irregular);

    b.run("freeness.chart", Freeness, "T acts generically freely on the quadric", checks::freeness);
    b.control("freeness.neg.doubled", Freeness, "T acts generically freely on the quadric", "mu_2 x mu_2", checks::freeness_doubled);

    b.run("invariants.reynolds", Invariants, "invariants of W on t have degrees 2 and 6", checks::reynolds);

    b.run("twist.split-is-lambda4", Twisting, "twisting Lambda4 by a torsor", checks::split_twist);
    b.run("twist.form.smooth", Twisting, "twisting Lambda4 by a torsor", checks::twisted_smooth);
    b.run("twist.congruence", Twisting, "the twist is a form of Lambda4", checks::congruence);
    b.run("twist.degree3-point", Twisting, "the twisted quadric has a point of degree 3", checks::degree3);
    b.run("twist.springer", Twisting, "Springer's theorem gives a rational point", checks::springer);
    b.run("twist.stereographic", Twisting, "a smooth quadric with a rational point is rational", checks::stereographic_twisted);
    b.run("twist.split.stereographic", Twisting, "a smooth quadric with a rational point is rational", checks::stereographic_split);
    b.run("twist.circle.stereographic", Properties, "plumbing", checks::stereographic_circle);
    b.run("twist.springer.branch-two", Twisting, "Springer's theorem gives a rational point", checks::branch_two);
    b.control("twist.neg.off-quadric", Twisting, "Springer's theorem gives a rational point", "not on the quadric", checks::off_quadric);

    b.run("props.field-axioms", Properties, "plumbing", checks::field_axioms);
    b.run("props.bilinearization", Properties, "plumbing", checks::bilinearization);
    b.run("props.ad-homomorphism", Properties, "plumbing", checks::ad_homomorphism);

    b.skip("scope.w-model-uniqueness", "W-models are unique up to W-equivariant birational equivalence", "general existence argument, not a finite computation");
    b.skip("scope.single-orbit-fibers", "generic fibers of the adjoint quotient are single W-orbits", "structural theorem about G2, not a finite computation");
    b.skip("scope.hilbert-90", "twisting by Hilbert 90", "the trace-form model is certified congruent to Lambda4 instead");
    b.skip("scope.special-group", "the special group P has trivial torsors", "Galois-cohomological input taken from the literature");
    b.0
}

/// Glob match with `*` wildcards, against any of the comma-separated patterns.
pub fn matches(pattern: &str, id: &str) -> bool {
    pattern.split(',').map(str::trim).filter(|p| !p.is_empty()).any(|p| glob::Pattern::new(p).is_ok_and(|g| g.matches(id)))
}

pub fn select<'a>(all: &'a [CheckDescriptor], pattern: &str) -> Vec<&'a CheckDescriptor> {
    all.iter().filter(|d| matches(pattern, &d.id)).collect()
}
