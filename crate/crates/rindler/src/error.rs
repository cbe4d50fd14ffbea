//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by coordinate maps, series construction, linear algebra,
/// and the sweep driver.
#[derive(Debug, Error)]
pub enum Error {
    /// The event lies on a Rindler horizon |t| = |x|, where the wedge
    /// coordinates are undefined.
    #[error("event lies on a horizon (|t| = |x|): t = {t}, x = {x}")]
    OnHorizon { t: f64, x: f64 },

    /// rho = 0 is the horizon itself; no accelerated worldline passes through it.
    #[error("rho = 0 does not label an accelerated worldline")]
    ZeroRho,

    /// The sign of rho contradicts the declared sector convention
    /// (positive in R and F, negative in L and P).
    #[error("rho = {rho} has the wrong sign for sector {sector}")]
    SectorSignMismatch { rho: f64, sector: &'static str },

    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} = {value} outside valid range {expected}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// omega is so small that q = e^(-pi*omega) rounds to 1 in f64; the
    /// squeeze coefficients are no longer representable.
    #[error("omega = {omega:e} underflows the Bogoliubov coefficients (q rounds to 1)")]
    DegenerateMode { omega: f64 },

    /// A truncation search or series summation failed to reach the requested
    /// tolerance within the iteration budget.
    #[error("series cannot reach tolerance {tol:e} at q = {q} within {budget} terms")]
    NoConvergence { q: f64, tol: f64, budget: usize },

    #[error("matrix is not symmetric: max |M - M^T| entry = {max_asymmetry:e}")]
    NotHermitian { max_asymmetry: f64 },

    #[error("Jacobi diagonalization did not converge: dim = {dim}, off-diagonal norm = {off_norm:e}")]
    EigenNoConvergence { dim: usize, off_norm: f64 },

    /// A density matrix has an eigenvalue below the PSD tolerance.
    #[error("density matrix violates positivity: min eigenvalue = {min_eigenvalue:e}")]
    PsdViolation { min_eigenvalue: f64 },

    /// The tripartite oracle is defined for the number-entangled family only.
    #[error("operation not supported for the {family} state family")]
    UnsupportedFamily { family: &'static str },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 config, 3 numerical contract, 4 i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Io(_) | Error::Json(_) => 4,
            _ => 3,
        }
    }
}
