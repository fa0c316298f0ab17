//! Error type shared by all modules.

use crate::exactla::Sign;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("mixed scalar rings: kappa = {0} vs kappa = {1}")]
    MixedKappa(Sign, Sign),

    #[error("division by zero")]
    DivisionByZero,

    #[error("element {0} is a zero divisor (kappa = +1) and has no inverse")]
    ZeroDivisor(String),

    #[error("Lorentz-number entries (kappa = +1 with nonzero imaginary part) admit zero divisors; elimination requires entries in Q or Q[i]")]
    LorentzElimination,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("basis index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),

    #[error("Jacobi identity fails at basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),

    #[error("span vectors are linearly dependent")]
    DependentSpan,

    #[error("block structure mismatch: {0}")]
    BlockMismatch(String),

    #[error("classical-form invariant violated: {0}")]
    ClassicalInvariant(String),

    #[error("incompatible extremal data: {0}")]
    ExtremalIncompatible(String),

    #[error("structure is neither block-diagonal nor block-off-diagonal")]
    NotExtremal,

    #[error("operation requires lambda = +1 (real eigenvalues); use the Nijenhuis criterion for lambda = -1")]
    RequiresParacomplex,

    #[error("operation requires a (1,1)-structure, got ({0},{1})")]
    RequiresOneOne(Sign, Sign),

    #[error("matrix does not square to lambda * id")]
    NotInvolution,

    #[error("inadmissible signature: {0}")]
    InadmissibleSignature(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("unknown catalog entry '{0}'")]
    UnknownEntry(String),

    #[error("anti-commutation failure: {0}")]
    AntiCommutation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
