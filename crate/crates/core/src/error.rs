use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the evaluators, backends and exact routines.
#[derive(Debug, Error)]
pub enum ZetaError {
    #[error("local factor is singular at s = {s}: |1 - N(p)^-s| = {magnitude:e} for norm {norm}")]
    SingularLocalFactor { norm: f64, s: Complex64, magnitude: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("s = {s} lies within {distance:e} of the singular point {point}")]
    SingularityProximity { s: Complex64, point: Complex64, distance: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("pole at s = 1")]
    PoleAtOne,

    #[error("argument principle could not resolve box {0}")]
    UnresolvedBox(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("root refinement failed: {0}")]
    RootRefinement(String),

    #[error("group order {0} is not a product of two distinct primes")]
    GroupOrder(u32),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = ZetaError> = std::result::Result<T, E>;
