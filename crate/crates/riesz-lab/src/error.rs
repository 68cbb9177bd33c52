//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// Validation failures (bad dimensions, parameter domains, malformed input)
/// are distinguished from numerical failures (loss of positive definiteness,
/// quadrature non-convergence, rejected draws) so callers can map them to
/// different exit statuses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("algebra mismatch: expected beta={expected}, got beta={got}")]
    TagMismatch { expected: u32, got: u32 },

    #[error("beta must be one of 1, 2, 4, 8; got {got}")]
    InvalidBeta { got: u32 },

    #[error("matrix operations are not supported at beta=8 (octonions are non-associative); only scalar/analytic formulas are available")]
    OctonionMatrixOp,

    #[error("matrix is not Hermitian positive definite: {reason}")]
    NotPositiveDefinite { reason: String },

    #[error("invalid weight vector: {reason}")]
    InvalidWeight { reason: String },

    #[error("domain violation: requires {requirement}")]
    DomainViolation { requirement: String },

    #[error("gamma function pole: {context}")]
    GammaPole { context: String },

    #[error("quaternion embedding spectrum failed the multiplicity-2 pairing check: {detail}")]
    PairingFailure { detail: String },

    #[error("quadrature did not converge within {max_subdivisions} subdivisions")]
    QuadratureNoConvergence { max_subdivisions: u32 },

    #[error("draw rejected after {attempts} attempts: {reason}")]
    RetryExhausted { attempts: u32, reason: String },

    #[error("invalid eigenvalue vector: {reason}")]
    EigenvalueOrdering { reason: String },

    #[error("not enough samples: need at least {min}, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("unsupported operation: {context}")]
    Unsupported { context: String },

    #[error("invalid matrix JSON: {reason}")]
    InvalidMatrixJson { reason: String },
}

impl Error {
    /// True when the error reflects bad input rather than a numerical failure.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::TagMismatch { .. }
                | Error::InvalidBeta { .. }
                | Error::OctonionMatrixOp
                | Error::InvalidWeight { .. }
                | Error::DomainViolation { .. }
                | Error::EigenvalueOrdering { .. }
                | Error::TooFewSamples { .. }
                | Error::Unsupported { .. }
                | Error::InvalidMatrixJson { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
