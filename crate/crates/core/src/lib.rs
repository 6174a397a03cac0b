//! Numerical toolkit for principal component analysis.
//!
//! The crate is organised bottom-up:
//!
//! * [`stats`]: sums, means, sample variance/standard deviation, covariance
//!   and covariance matrices (all with `n - 1` normalization).
//! * [`matrix`]: a row-major [`DenseMatrix`] with products, elementwise
//!   operations, Gauss-Jordan inverse and an SVD-backed pseudo-inverse.
//! * [`decomp`]: cyclic Jacobi eigendecomposition for symmetric matrices and
//!   one-sided Jacobi SVD, plus eigenpair sorting and sign canonicalization.
//! * [`pca`]: covariance-method and SVD-method PCA, the fitted [`PcaModel`]
//!   and its plain-text model file.
//! * [`format`]: fixed-point number formatting used for tabular output.
//!
//! No external numerical crates are used.

pub mod decomp;
pub mod error;
pub mod format;
pub mod matrix;
pub mod pca;
pub mod stats;
mod vector;

pub use decomp::{EigenResult, SvdResult};
pub use error::{Error, Result};
pub use matrix::{DenseMatrix, ElementwiseOp};
pub use pca::{ComponentRecord, PcaAlgorithm, PcaMethod, PcaModel};
pub use vector::NumericVector;
