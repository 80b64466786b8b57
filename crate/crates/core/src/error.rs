//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by matrix routines, problem builders and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix contains non-finite entries (frobenius norm {norm})")]
    NonFinite { norm: f64 },

    #[error("eigensolver failed to converge (matrix frobenius norm {norm})")]
    EigenFailed { norm: f64 },

    #[error("label `{0}` is not part of the basis")]
    ForeignLabel(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("structurally empty problem: no variables")]
    EmptyProblem,

    #[error("linear system factorization failed: {0}")]
    FactorizationFailed(String),

    #[error("solver finished with status {status:?}: residuals ({primal:.3e}, {dual:.3e}, gap {gap:.3e}) above tolerance")]
    SolverFailed {
        status: crate::sdp::Status,
        primal: f64,
        dual: f64,
        gap: f64,
    },

    #[error("empirical gap {gap:.6e} exceeds certified bound {bound:.6e} + tolerance")]
    BoundViolated { gap: f64, bound: f64 },

    #[error("enumeration cap exceeded: {sequences} index sequences > {cap}")]
    EnumerationCap { sequences: u128, cap: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
