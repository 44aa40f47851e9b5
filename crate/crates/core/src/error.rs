use thiserror::Error;

use crate::rational::Rational;

/// Everything that can go wrong in the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} exceeds the supported maximum of {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("structure constant entry ({i}, {j}) must satisfy i < j")]
    UnorderedPair { i: usize, j: usize },

    #[error("structure constant entry ({i}, {j}) appears more than once")]
    DuplicatePair { i: usize, j: usize },

    #[error("expected {expected} basis names, found {found}")]
    BasisNameCount { expected: usize, found: usize },

    #[error("Jacobi identity fails at triple ({}, {}, {}) with residual {}", .triple.0, .triple.1, .triple.2, fmt_vec(.residual))]
    JacobiViolation {
        triple: (usize, usize, usize),
        residual: Vec<Rational>,
    },

    #[error("subspace is not an ideal: [{}, e{basis_index}] leaves it", fmt_vec(.witness))]
    NotAnIdeal {
        witness: Vec<Rational>,
        basis_index: usize,
    },

    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,

    #[error("ad(sigma) is not nilpotent: the rank of its powers stabilizes at {rank} from power {power} on")]
    NotNilpotent { power: usize, rank: usize },

    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("matrix is singular")]
    Singular,

    #[error("cochain degree {degree} exceeds algebra dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("module action is not a representation at pair ({i}, {j})")]
    NotARepresentation { i: usize, j: usize },

    #[error("invalid subspace data: {0}")]
    InvalidSplit(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid rational {0:?}")]
    Rational(String),

    #[error("unknown example {0:?}")]
    UnknownExample(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    format!("({})", parts.join(", "))
}
