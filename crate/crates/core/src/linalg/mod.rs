//! Exact linear algebra over any [`Field`](crate::arith::Field).

mod matrix;
mod modules;
mod span;

pub use matrix::Matrix;
pub use modules::{direct_sum_algebra_dim, image_basis, HomSpace, Rep, Spin};
pub use span::EchelonSpan;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("no cyclic vector found")]
    NotCyclic,
    #[error("subspace is not invariant")]
    NotInvariant,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("span did not stabilize within {0} elements")]
    NoConvergence(usize),
}
