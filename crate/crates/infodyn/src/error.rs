//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Series lengths (or grids) that must agree do not.
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    /// Too few observations for the requested operation.
    #[error("insufficient length: {0}")]
    InsufficientLength(String),
    /// A parameter violates its contract.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    /// Zero-variance input to a distance-based estimator (enable jitter
    /// for heavily discretised data).
    #[error("zero-variance input: {0}")]
    ZeroVariance(String),
    /// A linear system or covariance matrix is singular.
    #[error("singular system: {0}")]
    Singular(String),
    /// Quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),
    /// GARCH parameters violate the stationarity condition.
    #[error("stationarity violated: {0}")]
    NonStationary(String),
    /// Malformed input data (CSV rows, timestamps out of order, ...).
    #[error("data error: {0}")]
    Data(String),
    /// Invalid run configuration.
    #[error("config error: {0}")]
    Config(String),
    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 config, 3 data, 4 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidParam(_) => 2,
            Error::Data(_)
            | Error::Io(_)
            | Error::LengthMismatch(_)
            | Error::InsufficientLength(_) => 3,
            Error::ZeroVariance(_)
            | Error::Singular(_)
            | Error::QuadratureNonConvergence(_)
            | Error::NonStationary(_) => 4,
        }
    }
}
