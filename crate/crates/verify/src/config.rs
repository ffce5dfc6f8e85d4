use g2rat_core::arith::is_prime;
use g2rat_core::exec::Exec;
use g2rat_core::quadform::TwistData;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 20_240_607;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse coefficient list {0:?}")]
    BadCoefficients(String),
    #[error("invalid torsor: {0}")]
    BadTorsor(String),
}

/// Parameters of a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Characteristics for the adjoint differential checks.
    pub prop1_primes: Vec<u64>,
    /// Characteristics for the smoothness of the split quadric.
    pub smooth_primes: Vec<u64>,
    /// Monic cubic, constant term first.
    pub cubic: Vec<i64>,
    /// Monic quadratic, constant term first.
    pub quadratic: Vec<i64>,
    pub seed: u64,
    #[serde(skip, default = "Exec::default")]
    pub exec: Exec,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            prop1_primes: vec![2, 3, 5, 7, 11],
            smooth_primes: vec![2, 3, 5, 7],
            cubic: vec![-2, 0, 0, 1],
            quadratic: vec![-5, 0, 1],
            seed: DEFAULT_SEED,
            exec: Exec::default(),
        }
    }
}

/// `"-2,0,0,1"` as integers, constant term first.
pub fn parse_coefficients(s: &str) -> Result<Vec<i64>, ConfigError> {
    s.split(',').map(|c| c.trim().parse::<i64>().map_err(|_| ConfigError::BadCoefficients(s.to_string()))).collect()
}

impl Config {
    /// Checks primes and builds the torsor; run before any check.
    pub fn validate(&self) -> Result<TwistData, ConfigError> {
        if let Some(&p) = self.prop1_primes.iter().chain(&self.smooth_primes).find(|&&p| !is_prime(p)) {
            return Err(ConfigError::NotPrime(p));
        }
        TwistData::from_coeffs(&self.cubic, &self.quadratic).map_err(|e| ConfigError::BadTorsor(e.to_string()))
    }
}
