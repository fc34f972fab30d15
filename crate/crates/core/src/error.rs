use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid truncation: {0}")]
    InvalidSpec(String),

    #[error("method {method} cannot sample {target}")]
    InvalidMethod {
        method: &'static str,
        target: &'static str,
    },

    #[error("sampling failed: no acceptance after {proposals} proposals")]
    SamplingFailure { proposals: u64 },

    #[error("degenerate interval: standardized width {width:e} is below 1e-12")]
    DegenerateInterval { width: f64 },

    #[error("extreme truncation: normalizing mass {mass:e} underflows")]
    ExtremeTruncation { mass: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("covariance is not symmetric (entry ({row}, {col}))")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("matrix is too ill-conditioned to invert (condition number {condition:e})")]
    IllConditioned { condition: f64 },

    #[error("invalid precision matrix: diagonal entry {index} is {value}")]
    InvalidPrecision { index: usize, value: f64 },

    #[error("conditional variance of coordinate {index} fails the 1/V_ii cross-check (deviation {deviation:e})")]
    InconsistentMoments { index: usize, deviation: f64 },

    #[error("empty slice for coordinate {index}: chain state is outside the region")]
    InconsistentState { index: usize },

    #[error("point lies outside the truncation region")]
    OutsideRegion,

    #[error("rejection sampler gave up after {trials} trials")]
    LowAcceptance { trials: u64 },

    #[error("samples must be sorted in nondecreasing order")]
    Unsorted,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
