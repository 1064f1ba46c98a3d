//! Error types shared across the crate.

use std::fmt;

/// Errors produced when building or validating algebraic objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Modulus of a prime field failed validation.
    BadModulus(String),
    /// Ring construction rejected the variable list.
    BadRing(String),
    /// A monomial order did not match the ring it was used with.
    BadOrder(String),
    /// Syntax error while parsing, with a byte offset into the input.
    Parse { position: usize, message: String },
    /// An identifier in the input is not a variable of the ring.
    UnknownVariable { position: usize, name: String },
    /// Exponent or total degree exceeded the hard caps.
    DegreeOverflow(String),
    /// A matrix that must be invertible is singular.
    SingularMatrix,
    /// Operation requires inputs from the same ring.
    RingMismatch,
    /// Operation received an input that violates its precondition.
    Invalid(String),
    /// A hard size guard on a brute-force search was exceeded.
    SearchBound(String),
    /// An iteration bound (saturation, retries) was exhausted.
    BoundExhausted(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::BadModulus(m) => write!(f, "bad modulus: {m}"),
            AlgebraError::BadRing(m) => write!(f, "bad ring: {m}"),
            AlgebraError::BadOrder(m) => write!(f, "bad monomial order: {m}"),
            AlgebraError::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            AlgebraError::UnknownVariable { position, name } => {
                write!(f, "unknown variable `{name}` at byte {position}")
            }
            AlgebraError::DegreeOverflow(m) => write!(f, "degree overflow: {m}"),
            AlgebraError::SingularMatrix => write!(f, "matrix is singular"),
            AlgebraError::RingMismatch => write!(f, "operands belong to different rings"),
            AlgebraError::Invalid(m) => write!(f, "{m}"),
            AlgebraError::SearchBound(m) => write!(f, "search bound exceeded: {m}"),
            AlgebraError::BoundExhausted(m) => write!(f, "iteration bound exhausted: {m}"),
        }
    }
}

impl std::error::Error for AlgebraError {}

pub type Result<T> = std::result::Result<T, AlgebraError>;
