use thiserror::Error;

use crate::exactlin::LinalgError;
use crate::report::Report;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("dangling reference: {0}")]
    DanglingReference(String),
    #[error("{kind} presentation is missing its {part}")]
    MissingPart { kind: &'static str, part: &'static str },
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("input failed verification:\n{0}")]
    Unverified(Box<Report>),
    #[error("alpha-condition fails for {pairing}: pairing rank {rank} < {dim}")]
    AlphaCondition { pairing: String, rank: usize, dim: usize },
    #[error("closure violated: {0}")]
    Closure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure:\n{0}")]
    Internal(Box<Report>),
    #[error("not supported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(context: impl Into<String>, expected: usize, found: usize) -> Error {
    Error::DimensionMismatch {
        context: context.into(),
        expected,
        found,
    }
}

pub(crate) fn expect_dim(context: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(mismatch(context, expected, found))
    }
}

/// Turns a failed report into `Error::Unverified`.
pub(crate) fn require(report: Report) -> Result<Report> {
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::Unverified(Box::new(report)))
    }
}

/// Like `require`, for checks that cannot fail on verified input.
pub(crate) fn require_internal(report: Report) -> Result<Report> {
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::Internal(Box::new(report)))
    }
}
