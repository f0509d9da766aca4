//! Exact-arithmetic toolkit for finite-dimensional Lie superalgebras:
//! matrix and vector-field models, derivation solving, Z-gradings,
//! filtrations, and verification of depth-one grading inventories.
//!
//! Everything is computed over `Q` with arbitrary-precision rationals; all
//! reported results are exact, and canonical forms (RREF bases, reduced
//! scalars, sorted tables) make outputs byte-reproducible.

pub mod algebra;
pub mod burnside;
pub mod catalog;
pub mod classify;
pub mod derivations;
pub mod error;
pub mod filtration;
pub mod grading;
pub mod grassmann;
pub mod matrix;
pub mod scalar;
pub mod space;
pub mod subspace;
pub mod svec;

pub use algebra::LieSuperalgebra;
pub use error::{CoreError, Result};
pub use grading::Grading;
pub use matrix::LinearMap;
pub use scalar::Scalar;
pub use space::{Parity, SuperSpace};
pub use subspace::Subspace;

/// Maximum number of odd indeterminates accepted by the vector-field
/// constructions; override with the `SUPERGRADE_MAX_N` environment variable.
pub fn max_odd_vars() -> usize {
    std::env::var("SUPERGRADE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(4)
}
