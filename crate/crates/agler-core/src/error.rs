use alloc::string::String;
use core::fmt;

/// Errors surfaced by the core pipelines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand dimensions (variable counts, vector lengths, matrix shapes) disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// A Gram matrix has an eigenvalue below the positive-semidefinite tolerance.
    NotPsd { eigenvalue: f64, threshold: f64 },
    /// The polarized coefficient identity L*L = R*R fails: the certificate does
    /// not induce an isometry.
    NotIsometric { deviation: f64, tolerance: f64 },
    /// An input violates a precondition of the construction (e.g. p(0) = 0).
    DegenerateInput { reason: String },
    /// The torus restriction of |p|^2 - |q|^2 is not divisible by 1 - |z_j|^2.
    FaceNotFactorable { max_violation: f64 },
    /// A variable exceeds the degree supported by the operation.
    UnsupportedDegree { variable: usize, degree: u32 },
    /// A linear solve hit a numerically singular matrix.
    SingularMatrix,
    /// A constructed object failed its built-in self check.
    SelfCheckFailed { max_error: f64 },
    /// Malformed or inconsistent input data.
    InvalidData { reason: String },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotPsd { eigenvalue, threshold } => {
                write!(f, "not PSD: eigenvalue {eigenvalue:e} below threshold -{threshold:e}")
            }
            Error::NotIsometric { deviation, tolerance } => write!(
                f,
                "not isometric: certificate invalid (deviation {deviation:e} > {tolerance:e})"
            ),
            Error::DegenerateInput { reason } => write!(f, "degenerate input: {reason}"),
            Error::FaceNotFactorable { max_violation } => write!(
                f,
                "face not factorable: residual {max_violation:e} (input not inner or degree hypothesis violated)"
            ),
            Error::UnsupportedDegree { variable, degree } => write!(
                f,
                "unsupported degree: variable {} has degree {degree}, expected at most 1",
                variable + 1
            ),
            Error::SingularMatrix => write!(f, "singular matrix"),
            Error::SelfCheckFailed { max_error } => {
                write!(f, "self check failed: max error {max_error:e}")
            }
            Error::InvalidData { reason } => write!(f, "invalid data: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
