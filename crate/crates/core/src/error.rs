//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus rejected: must be prime, greater than the degree, below 256.
    BadPrime { p: u64, degree: usize },
    /// Degree outside the supported range for the requested space.
    BadDegree { degree: usize, reason: &'static str },
    /// A monomial whose leaves are not a permutation of 1..n.
    NotMultilinear,
    /// A dendriform monomial outside the normal-form grammar where one was required.
    NotNormal,
    /// Malformed partition (parts must be weakly decreasing and positive).
    BadPartition(String),
    /// Matrix units are only defined for shapes whose base Clifton matrix
    /// is the identity.
    MatrixUnitUnavailable { lambda: String },
    /// The base Clifton matrix was singular (cannot happen for p > n).
    SingularCliftonBase { lambda: String },
    /// Malformed matrix snapshot text.
    BadSnapshot(String),
    /// Malformed polynomial text.
    BadPolynomial(String),
    /// An internal cross-check failed.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadPrime { p, degree } => write!(
                f,
                "modulus {p} rejected: need a prime greater than {degree} and below 256"
            ),
            Error::BadDegree { degree, reason } => {
                write!(f, "degree {degree} not supported: {reason}")
            }
            Error::NotMultilinear => {
                write!(f, "monomial is not multilinear of the expected degree")
            }
            Error::NotNormal => write!(f, "dendriform monomial is not in normal form"),
            Error::BadPartition(s) => write!(f, "bad partition: {s}"),
            Error::MatrixUnitUnavailable { lambda } => write!(
                f,
                "matrix units unavailable for shape {lambda}: base Clifton matrix is not the identity"
            ),
            Error::SingularCliftonBase { lambda } => {
                write!(f, "base Clifton matrix singular for shape {lambda}")
            }
            Error::BadSnapshot(s) => write!(f, "bad matrix snapshot: {s}"),
            Error::BadPolynomial(s) => write!(f, "bad polynomial text: {s}"),
            Error::Inconsistency(s) => write!(f, "internal consistency check failed: {s}"),
        }
    }
}

impl std::error::Error for Error {}
