use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Numeric payloads are stored as `f64` regardless of the scalar type the
/// operation ran with, so the error type stays object-safe and printable.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Bargmann index must be positive, got k = {0}")]
    NonPositiveIndex(f64),

    #[error("k' = k - 1/4 must be positive for the ladder realization, got k = {0}")]
    KPrimeOutOfRange(f64),

    #[error("point lies outside the unit disk: |w| = {0}")]
    OutsideDisk(f64),

    #[error("gamma pole: 2k - 1/2 = {0} is a nonpositive integer")]
    GammaPole(f64),

    #[error("normalization Gamma(s+2k-1/2)/Gamma(2k-1/2) is negative ({0}); no real square root")]
    NegativeNorm(f64),

    #[error("integral scalar product needs k > 3/4 for convergence, got k = {0}")]
    ConvergenceGuard(f64),

    #[error("{0}")]
    Domain(&'static str),

    #[error("truncation orders too small: need {needed} >= {minimum}")]
    TruncationOrder { needed: &'static str, minimum: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("eigenvalue iteration failed to converge")]
    NoConvergence,
}

pub type Result<T> = core::result::Result<T, Error>;
