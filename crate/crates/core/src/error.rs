use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("covariance matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("matrix is not symplectic (residual {residual:e})")]
    NotSymplectic { residual: f64 },

    #[error("covariance matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("eigenvalues cannot be matched into ±i pairs (residual {residual:e})")]
    SpectrumPairing { residual: f64 },

    #[error("eigensolver failed to converge")]
    NoConvergence,

    #[error("mode set is empty")]
    EmptyModeSet,

    #[error("mode index {index} out of range for {n_modes} modes")]
    ModeOutOfRange { index: usize, n_modes: usize },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("state is not pure (symplectic eigenvalue deviates from 1 by {deviation:e})")]
    NotPure { deviation: f64 },

    #[error("symplectic eigenvalue {0} is below the physical bound")]
    Unphysical(f64),

    #[error("non-positive symplectic eigenvalue {0} in partial transpose")]
    NonPositiveSpectrum(f64),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("{n_modes} modes exceeds the configured cap of {cap}")]
    CapExceeded { n_modes: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
