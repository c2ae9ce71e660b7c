//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes surfaced by the library.
///
/// Index fields inside [`Error::LeibnizViolation`] are 1-based, matching the
/// `a_1 .. a_n` convention of algebra files and fixture descriptions.
#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "Leibniz identity fails at basis triple (a{i}, a{j}, a{k}): \
         [a{i},[a{j},a{k}]] = {lhs} but [[a{i},a{j}],a{k}] - [[a{i},a{k}],a{j}] = {rhs}"
    )]
    LeibnizViolation {
        i: usize,
        j: usize,
        k: usize,
        lhs: String,
        rhs: String,
    },

    #[error("fields of characteristic 2 are not supported (1/2 must be invertible)")]
    Char2Field,

    #[error("modulus {0} is not an odd prime below 2^31")]
    InvalidModulus(u64),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("subspace is not a two-sided ideal: {witness}")]
    NotAnIdeal { witness: String },

    #[error("ideal is not invariant under the Lie-centroid: {witness}")]
    NotInvariant { witness: String },

    #[error("the derived Lie-ideal is not abelian; the kernel-intersection description does not apply")]
    TargetNotAbelian,

    #[error("map space is not closed under the commutator: {0}")]
    NotClosed(String),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown fixture name {0:?}")]
    UnknownFixture(String),

    #[error("requested enumeration is too large: {0}")]
    SpecTooLarge(String),

    #[error("parse error: {0}")]
    ParseError(String),
}
