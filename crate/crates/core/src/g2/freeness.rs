use num_traits::One;

use crate::arith::{smith_normal_form, IntMatrix};
use crate::cert::Certificate;

/// The torus acts generically freely on the chart iff the common kernel of
/// the chart characters is trivial, i.e. the weight matrix has full row
/// rank with all elementary divisors 1. Characteristic-free.
pub fn generic_freeness_certificate(weights: &IntMatrix) -> Certificate {
    let mut cert = Certificate::new("generic freeness");
    let snf = smith_normal_form(weights);
    let divs = snf.elementary_divisors();
    let shown: Vec<String> = divs.iter().map(ToString::to_string).collect();
    cert.record(format!("elementary divisors ({})", shown.join(",")));
    let rank = divs.len();
    cert.require(rank == weights.rows(), format!("rank {rank}"), format!("rank {rank} < {}: positive-dimensional stabilizer", weights.rows()));
    let torsion: Vec<String> = divs.iter().filter(|d| !d.is_one()).map(|d| format!("mu_{d}")).collect();
    cert.require(
        torsion.is_empty(),
        "generic stabilizer trivial in every characteristic",
        format!("generic stabilizer contains {}", torsion.join(" x ")),
    );
    cert
}
