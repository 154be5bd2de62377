//! Crate-wide error type.
//!
//! Exit-code mapping for the CLI lives in [`crate::cli`]; the variants here
//! are grouped so that mapping stays a simple match: config problems,
//! artifact-hash mismatches, and missing upstream stages each get their own
//! variant because they surface as distinct process exit codes.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration or arguments (CLI exit code 2).
    #[error("config error: {0}")]
    Config(String),

    /// An artifact's embedded config/panel hash does not match what the
    /// current stage expects (CLI exit code 3).
    #[error("hash mismatch: {context}: expected {expected}, found {found}")]
    HashMismatch {
        context: String,
        expected: String,
        found: String,
    },

    /// A required upstream artifact is absent (CLI exit code 4).
    #[error("missing upstream artifact: {stage}: {path}")]
    MissingUpstream { stage: String, path: PathBuf },

    /// Malformed artifact file (bad magic, truncated body, schema drift).
    #[error("artifact format error in {path}: {reason}")]
    ArtifactFormat { path: PathBuf, reason: String },

    /// A statistic evaluated to NaN where the contract requires a number.
    #[error("NaN statistic in column {column} at row {row}")]
    NanStatistic { column: String, row: usize },

    /// Violation of a numeric precondition (shapes, ranges, counts).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A test-fold sample's hash was observed during fitting/training.
    #[error("leakage detected: {0}")]
    Leakage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI contract
    /// (0 ok, 2 config error, 3 hash mismatch, 4 missing upstream; 1 other).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidInput(_) => 2,
            Error::HashMismatch { .. } => 3,
            Error::MissingUpstream { .. } => 4,
            _ => 1,
        }
    }
}
