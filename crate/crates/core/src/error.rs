//! Error type shared by the fallible constructors.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("bracket value for ({i},{j}) is not parity-homogeneous of the expected parity")]
    BadParity { i: usize, j: usize },
    #[error("[x,x] must vanish for even basis vector {i}")]
    EvenSquare { i: usize },
    #[error("Jacobi identity fails on basis triple ({i},{j},{k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("subspace is not closed under the bracket (rows {i},{j})")]
    NotClosed { i: usize, j: usize },
    #[error("subspace basis row {i} is not parity-homogeneous")]
    MixedParity { i: usize },
    #[error("subspace is not an ideal (row {i} against basis {j})")]
    NotIdeal { i: usize, j: usize },
    #[error("map is not a derivation (fails on basis pair ({i},{j}))")]
    NotDerivation { i: usize, j: usize },
    #[error("grading is not compatible with the bracket on pieces ({p},{q})")]
    NotGraded { p: i64, q: i64 },
    #[error("operator is not a grading operator: {reason}")]
    BadOperator { reason: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
