use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by configuration validation, root finding, and the
/// theorem verifiers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid zero configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for {len} entries")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "strictly positive weights required: the angle-sum identity can fail \
         when a weight vanishes"
    )]
    NonPositiveWeights,

    #[error("configuration has a single distinct zero; no consecutive pair exists")]
    SingleDistinctZero,

    #[error("congruence oracle requires pairwise distinct zeros")]
    MultipleZerosUnsupported,

    #[error("point coincides with a chord endpoint; the signed argument difference is undefined there")]
    EndpointProximity,

    /// Root iteration did not meet the residual criterion. Carries the best
    /// iterate so callers can inspect what went wrong.
    #[error("root finding did not converge after {iterations} iterations (max residual {max_residual:.3e})")]
    RootFindingFailed {
        iterations: usize,
        max_residual: f64,
        best_roots: Vec<Complex64>,
        residuals: Vec<f64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
