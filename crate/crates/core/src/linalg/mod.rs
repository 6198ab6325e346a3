//! Exact linear algebra over the Gaussian rationals.

mod bilinear;
mod matrix;
mod scalar;
mod subspace;
mod vector;

pub use bilinear::{to_dense, to_sparse, BilinearMap, SparseVec};
pub use matrix::{rref_rank, solve_particular, LinearSolver, Matrix, Rref, Solve};
pub use scalar::{ParseScalarError, Scalar};
pub use subspace::{kernel_basis, split_complement, QuotientCoords, Subspace};
pub use vector::{axpy, dot, hdot, is_zero_vec, unit_vec, vec_add, vec_scale, vec_sub, zero_vec, Vector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the enclosing space")]
    NotContained,
}
