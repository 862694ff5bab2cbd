pub mod algebra;
pub mod category;
pub mod cohomology;
pub mod cyclic;
pub mod error;
pub mod format;
pub mod hopf;
pub mod instances;
pub mod linalg;
pub mod modules;
pub mod report;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use linalg::{Matrix, QuotientSpace, SparseMatrix, SparseVec, Subspace};
pub use scalar::Scalar;
