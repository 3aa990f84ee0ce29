use thiserror::Error;

use crate::linalg::DensityCheck;

/// Errors produced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A matrix handed to the eigensolver deviates from Hermitian symmetry
    /// beyond the accepted tolerance.
    #[error("matrix is not Hermitian (max entrywise deviation {max_deviation:.3e})")]
    NonHermitian { max_deviation: f64 },

    /// A state vector is not normalized to unit length.
    #[error("state vector is not normalized (squared norm {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    /// A scalar parameter lies outside its documented range.
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    /// An embedding slot outside 1..=6.
    #[error("invalid embedding slot {0} (expected 1..=6)")]
    InvalidSlot(usize),

    /// A structurally invalid argument (wrong dimension, wrong reduction
    /// kind for the operation, non-finite entries, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A matrix that was required to be a density matrix failed validation.
    #[error("not a density matrix: {0}")]
    NotDensityMatrix(DensityCheck),

    /// A reduction of a supposed density matrix failed density-matrix
    /// validation. Reductions of valid states are always valid, so this
    /// signals that the input was not actually a density matrix.
    #[error("reduction failed density-matrix validation ({0}); the input was not a density matrix")]
    LemmaViolation(DensityCheck),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
