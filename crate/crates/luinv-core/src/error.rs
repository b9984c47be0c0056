use alloc::string::String;
use core::fmt;

/// Errors produced by state validation, tensor operations and the numerical
/// kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Amplitude vector length does not match the total dimension of the shape.
    LengthMismatch { expected: usize, got: usize },
    /// Vector cannot be normalized (zero vector, or norm deviates from 1 by
    /// more than the renormalization window).
    NotNormalizable { norm: f64 },
    /// Parameters violate a normalization constraint.
    NotNormalized { norm_sq: f64 },
    /// Invalid system shape (empty, zero local dimension, or total dimension
    /// above the supported bound).
    InvalidShape(String),
    /// Subsystem subset is invalid for the shape it is used with.
    InvalidSubset(String),
    /// Unfolding position outside 1..=k.
    BadPosition { position: usize, arity: usize },
    /// Matrix is not Hermitian within tolerance; carries the largest
    /// entrywise defect |M - M†|.
    NotHermitian { defect: f64 },
    /// Matrix fails a density-matrix invariant (trace or positivity);
    /// the message names the failing invariant.
    NotDensity(String),
    /// Jacobi sweep cap exceeded without convergence.
    EigensolverFailure { sweeps: usize },
    /// Matrix side exceeds the supported characteristic-polynomial bound.
    DimensionTooLarge { dim: usize, max: usize },
    /// Matrix is not square where a square matrix is required.
    NotSquare { rows: usize, cols: usize },
    /// Fingerprints computed over different system shapes.
    ShapeMismatch(String),
    /// Fingerprints computed under different conventions or key sets.
    ConventionMismatch(String),
    /// Catalog name not recognized.
    UnknownCatalogName(String),
    /// Catalog parameter missing or malformed.
    BadParameter(String),
    /// No random state with non-degenerate reduced spectra found within the
    /// retry budget.
    NoNondegenerateSample { attempts: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected} amplitudes, got {got}")
            }
            Error::NotNormalizable { norm } => {
                write!(f, "not normalizable: norm {norm:e} deviates from 1 by more than 1e-6")
            }
            Error::NotNormalized { norm_sq } => {
                write!(f, "parameters not normalized: squared norm {norm_sq} differs from 1")
            }
            Error::InvalidShape(msg) => write!(f, "invalid shape: {msg}"),
            Error::InvalidSubset(msg) => write!(f, "invalid subset: {msg}"),
            Error::BadPosition { position, arity } => {
                write!(f, "bad unfolding position {position}: must be in 1..={arity}")
            }
            Error::NotHermitian { defect } => {
                write!(f, "not Hermitian: largest entrywise defect {defect:e}")
            }
            Error::NotDensity(msg) => write!(f, "not a density matrix: {msg}"),
            Error::EigensolverFailure { sweeps } => {
                write!(f, "eigensolver failed to converge within {sweeps} sweeps")
            }
            Error::DimensionTooLarge { dim, max } => {
                write!(f, "matrix side {dim} exceeds the supported maximum {max}")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::ConventionMismatch(msg) => write!(f, "convention mismatch: {msg}"),
            Error::UnknownCatalogName(name) => write!(f, "unknown catalog name: {name}"),
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::NoNondegenerateSample { attempts } => {
                write!(f, "no sample with non-degenerate reduced spectra after {attempts} attempts")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
