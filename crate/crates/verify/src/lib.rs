//! Runs the registered certificate checks and renders their reports.

pub mod checks;
pub mod config;
pub mod context;
pub mod registry;
pub mod report;
pub mod runner;

pub use config::{parse_coefficients, Config, ConfigError, DEFAULT_SEED};
pub use registry::{registry, CheckDescriptor, Section};
pub use report::{emit_json, emit_markdown, emit_report, parse_json, Format, Status, VerificationReport};
pub use runner::run_suite;
