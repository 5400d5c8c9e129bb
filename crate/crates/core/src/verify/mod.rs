//! Identity registry and verification engines.
//!
//! Every result the crate certifies is a named, parameterized check.
//! [`registry`] holds the catalogue with per-check parameter bounds and the
//! smoke/full parameter grids; [`checks`] has the individual check bodies;
//! [`pipeline`] has the multi-stage log-membership verifications; [`suite`]
//! runs everything and collects deterministic reports.

pub mod checks;
pub mod engines;
pub mod pipeline;
pub mod registry;
pub mod report;
pub mod suite;

pub use registry::{registry_ids, run_check, CheckParams};
pub use report::{Engine, Status, VerificationReport, Witness};
pub use suite::{run_suite, SuiteLevel};

#[derive(Debug, Clone, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check id '{id}'; valid ids: {valid}")]
    UnknownId { id: String, valid: String },
    #[error("parameter out of bounds for '{id}': {detail}")]
    ParamOutOfBounds { id: String, detail: String },
    #[error("internal error: {0}")]
    Internal(String),
}
