use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of the numerical pipeline.
///
/// Every variant carries the offending numbers so callers can report what
/// actually went wrong instead of guessing from a message string.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An index was outside its documented range (basis labels, matrix entries).
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },
    /// A matrix required to be Hermitian was not, beyond tolerance.
    NotHermitian { residual: f64, tolerance: f64 },
    /// The Jacobi sweep failed to drive the off-diagonal norm below threshold.
    EigConvergence { sweeps: usize, off_norm: f64 },
    /// An eigenvalue sat below the allowed clamping window of a PSD operation.
    NegativeEigenvalue { value: f64, tolerance: f64 },
    /// LU elimination hit a pivot too small relative to the matrix scale.
    SingularMatrix { pivot: f64, scale: f64 },
    /// Vector or matrix dimensions do not match the operation.
    DimensionMismatch { expected: usize, got: usize },
    /// A parameter failed its validity constraint (sign, ordering, range).
    InvalidParameter { what: &'static str, value: f64 },
    /// The drive amplitude formula required the square root of a negative number.
    NegativeSqrtArgument { value: f64 },
    /// Integration produced a non-finite entry at the given step.
    NonFinite { step: usize },
    /// A reconstructed process matrix was asymmetric beyond tolerance.
    HermiticityViolation { residual: f64, tolerance: f64 },
    /// A population that must be real carried a significant imaginary part.
    ComplexPopulation { imaginary: f64 },
    /// A trace that must be positive was not.
    NonPositiveTrace { trace: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { what, index, limit } => {
                write!(f, "{what} index {index} out of range (limit {limit})")
            }
            Error::NotHermitian { residual, tolerance } => {
                write!(f, "matrix not Hermitian: residual {residual:e} > {tolerance:e}")
            }
            Error::EigConvergence { sweeps, off_norm } => {
                write!(f, "eigensolver failed after {sweeps} sweeps, off-diagonal norm {off_norm:e}")
            }
            Error::NegativeEigenvalue { value, tolerance } => {
                write!(f, "eigenvalue {value:e} below clamp window -{tolerance:e}")
            }
            Error::SingularMatrix { pivot, scale } => {
                write!(f, "singular matrix: pivot {pivot:e} against scale {scale:e}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::InvalidParameter { what, value } => {
                write!(f, "invalid parameter {what} = {value}")
            }
            Error::NegativeSqrtArgument { value } => {
                write!(f, "drive amplitude undefined: sqrt of {value:e}")
            }
            Error::NonFinite { step } => {
                write!(f, "non-finite state entry at integration step {step}")
            }
            Error::HermiticityViolation { residual, tolerance } => {
                write!(f, "process matrix asymmetry {residual:e} exceeds {tolerance:e}")
            }
            Error::ComplexPopulation { imaginary } => {
                write!(f, "population has imaginary part {imaginary:e}")
            }
            Error::NonPositiveTrace { trace } => {
                write!(f, "trace {trace:e} is not positive")
            }
        }
    }
}

impl core::error::Error for Error {}
