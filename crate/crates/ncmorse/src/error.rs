//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by constructors, operator algebra, and the CLI front end.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical or representation parameter violated its constraint.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two operators of different basis dimension were combined.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Inner products require both functions to share the same sample grid.
    #[error("grid mismatch: inner products require identical sample coordinates")]
    GridMismatch,

    /// The deformation matrix is not invertible to working precision.
    #[error("deformation matrix is numerically singular: |det| = {det_abs:e}")]
    SingularDeformation { det_abs: f64 },

    /// Terminating-series exponentials require a nilpotent argument.
    #[error("matrix '{label}' is not nilpotent of order <= 3")]
    NotNilpotent { label: String },

    /// The dense eigensolver ran out of iterations.
    #[error("eigensolver did not converge for dimension {dim} within {max_iterations} iterations")]
    EigenNonConvergence { dim: usize, max_iterations: usize },

    /// Malformed command-line value (dims, q list, g matrix, numbers).
    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
