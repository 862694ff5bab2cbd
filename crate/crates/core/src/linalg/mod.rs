//! Exact linear algebra over ℚ.

pub mod dense;
pub mod quotient;
pub mod sparse;
pub mod subspace;

pub use dense::Matrix;
pub use quotient::{inclusion, restrict, QuotientSpace};
pub use sparse::{Accumulator, SparseMatrix, SparseVec};
pub use subspace::{joint_kernel, kernel, kernel_of_columns, kernel_sparse, rank, rref, Echelon, Subspace};
