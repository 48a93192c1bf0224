use core::fmt;

use crate::scalar::MaxPlus;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// Operand sizes do not match.
    DimensionMismatch { expected: usize, found: usize },
    /// Two matrices live on different index windows.
    OffsetMismatch { left: i64, right: i64 },
    /// External index outside `[offset, offset + n - 1]`.
    IndexOutOfWindow { index: i64, lo: i64, hi: i64 },
    /// Rows of different length passed to a matrix constructor.
    NotSquare,
    /// The digraph has no cycle, so there is no maximum cycle mean.
    Acyclic,
    /// A cycle of positive weight exists and the Kleene star diverges.
    PositiveCycle,
    /// The operation requires `λ(A) = 0`.
    NonZeroEigenvalue(MaxPlus),
    /// The vector does not satisfy `A ⊗ v = λ ⊗ v`.
    NotEigenvector,
    /// An eigenvector has a bottom coordinate where a finite one is needed.
    InfiniteComponent { index: i64 },
    /// Undressing or constraints were requested without a soliton.
    NoSoliton,
    /// `μ` must be nonnegative.
    NegativeMu,
    /// An empty window was requested.
    EmptyWindow { lo: i64, hi: i64 },
    /// The window does not cover `[lo, hi]`, the smallest admissible one.
    WindowTooSmall { lo: i64, hi: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::OffsetMismatch { left, right } => {
                write!(f, "index offsets differ: {left} vs {right}")
            }
            Error::IndexOutOfWindow { index, lo, hi } => {
                write!(f, "index {index} outside window [{lo}, {hi}]")
            }
            Error::NotSquare => f.write_str("matrix rows are not square"),
            Error::Acyclic => f.write_str("digraph is acyclic, no cycle mean exists"),
            Error::PositiveCycle => f.write_str("positive cycle: Kleene star diverges"),
            Error::NonZeroEigenvalue(lambda) => {
                write!(f, "maximum cycle mean is {lambda}, expected 0")
            }
            Error::NotEigenvector => f.write_str("vector is not an eigenvector"),
            Error::InfiniteComponent { index } => {
                write!(f, "eigenvector component at {index} is -inf")
            }
            Error::NoSoliton => f.write_str("no soliton selected"),
            Error::NegativeMu => f.write_str("mu must be nonnegative"),
            Error::EmptyWindow { lo, hi } => write!(f, "empty window [{lo}, {hi}]"),
            Error::WindowTooSmall { lo, hi } => {
                write!(f, "window must contain [{lo}, {hi}]")
            }
        }
    }
}

impl core::error::Error for Error {}
