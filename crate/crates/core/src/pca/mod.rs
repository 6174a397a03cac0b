//! Principal component analysis.
//!
//! Two fitting routes produce the same [`PcaModel`] contract:
//!
//! * the covariance route centers the data, forms the sample covariance
//!   matrix and eigendecomposes it;
//! * the SVD route centers the data and takes its singular value
//!   decomposition directly, converting `sigma^2 / (n - 1)` into eigenvalues.
//!
//! [`pca_fit`] uses the SVD route. Under [`PcaMethod::Standardize`] every
//! centered column is also divided by its sample standard deviation, which
//! turns the analysis into an eigendecomposition of the correlation matrix.

mod model_file;

pub use model_file::{read_model, write_model, MODEL_HEADER};

use crate::decomp::{self, sort_eigenpairs_desc_abs};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::stats;
use crate::vector::NumericVector;

/// Column standard deviations at or below this are rejected by
/// [`PcaMethod::Standardize`].
pub const MIN_STD_DEV: f64 = 1e-12;

/// Eigenvalues with `|lambda| < EIGENVALUE_CLAMP * lambda_max` are set to 0.
pub const EIGENVALUE_CLAMP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PcaMethod {
    /// Subtract column means (covariance analysis).
    #[default]
    Center,
    /// Subtract column means and divide by column standard deviations
    /// (correlation analysis).
    Standardize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PcaAlgorithm {
    #[default]
    Svd,
    Covariance,
}

/// A fitted principal component analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct PcaModel {
    method: PcaMethod,
    n_samples: usize,
    column_means: NumericVector,
    column_std_devs: Option<NumericVector>,
    eigenvalues: NumericVector,
    components: DenseMatrix,
    proportions: NumericVector,
    cumulative_proportions: NumericVector,
}

/// Summary of one principal component.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentRecord {
    /// Zero-based position in the model.
    pub index: usize,
    pub eigenvalue: f64,
    /// Singular value of the prepared data matrix, `sqrt(lambda * (n - 1))`.
    pub singular_value: f64,
    pub proportion: f64,
    pub cumulative_proportion: f64,
    pub direction: Vec<f64>,
}

/// PCA through the eigendecomposition of the covariance matrix.
pub fn pca_fit_covariance(data: &DenseMatrix) -> Result<PcaModel> {
    fit(data, PcaMethod::Center, PcaAlgorithm::Covariance)
}

/// PCA through the singular value decomposition of the centered data.
pub fn pca_fit_svd(data: &DenseMatrix) -> Result<PcaModel> {
    fit(data, PcaMethod::Center, PcaAlgorithm::Svd)
}

pub fn pca_fit(data: &DenseMatrix, method: PcaMethod) -> Result<PcaModel> {
    fit(data, method, PcaAlgorithm::Svd)
}

pub fn pca_fit_with(
    data: &DenseMatrix,
    method: PcaMethod,
    algorithm: PcaAlgorithm,
) -> Result<PcaModel> {
    fit(data, method, algorithm)
}

fn fit(data: &DenseMatrix, method: PcaMethod, algorithm: PcaAlgorithm) -> Result<PcaModel> {
    let n = data.rows();
    if n < 2 {
        return Err(Error::InsufficientData { needed: 2, got: n });
    }
    let means = stats::column_means(data)?;
    let mut prepared = data.subtract_row_vector(&means)?;
    let std_devs = match method {
        PcaMethod::Center => None,
        PcaMethod::Standardize => {
            let sd = stats::column_std_devs(data)?;
            if let Some(column) = sd.iter().position(|&s| s <= MIN_STD_DEV) {
                return Err(Error::ConstantColumn { column });
            }
            prepared = prepared.divide_row_vector(&sd)?;
            Some(sd)
        }
    };

    let keep = n.min(data.cols());
    let (eigenvalues, components) = match algorithm {
        PcaAlgorithm::Covariance => {
            let cov = stats::covariance_matrix(&prepared)?;
            let eig = sort_eigenpairs_desc_abs(decomp::eig_symmetric(&cov)?);
            let values = eig.eigenvalues[..keep].to_vec();
            (values, eig.eigenvectors.leading_columns(keep))
        }
        PcaAlgorithm::Svd => {
            let svd = decomp::svd(&prepared)?;
            let values = decomp::singular_values_to_eigenvalues(&svd.singular_values, n)?;
            (values.into_vec(), svd.right_vectors)
        }
    };

    PcaModel::from_parts(
        method,
        n,
        means,
        std_devs,
        clamp_eigenvalues(eigenvalues),
        components,
    )
}

fn clamp_eigenvalues(mut values: Vec<f64>) -> NumericVector {
    let max = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    for v in &mut values {
        if v.abs() < EIGENVALUE_CLAMP * max {
            *v = 0.0;
        }
    }
    NumericVector::from_vec_unchecked(values)
}

impl PcaModel {
    /// Assembles a model from fitted quantities and derives the component
    /// proportions.
    ///
    /// `components` holds one unit-norm direction per column, in the same
    /// order as `eigenvalues`.
    pub fn from_parts(
        method: PcaMethod,
        n_samples: usize,
        column_means: NumericVector,
        column_std_devs: Option<NumericVector>,
        eigenvalues: NumericVector,
        components: DenseMatrix,
    ) -> Result<PcaModel> {
        let p = column_means.len();
        if components.rows() != p {
            return Err(Error::LengthMismatch {
                left: p,
                right: components.rows(),
            });
        }
        if components.cols() != eigenvalues.len() {
            return Err(Error::LengthMismatch {
                left: components.cols(),
                right: eigenvalues.len(),
            });
        }
        match (&column_std_devs, method) {
            (Some(sd), PcaMethod::Standardize) if sd.len() == p => {}
            (None, PcaMethod::Center) => {}
            (Some(sd), PcaMethod::Standardize) => {
                return Err(Error::LengthMismatch {
                    left: p,
                    right: sd.len(),
                })
            }
            _ => {
                return Err(Error::LengthMismatch {
                    left: usize::from(method == PcaMethod::Standardize),
                    right: usize::from(column_std_devs.is_some()),
                })
            }
        }
        if n_samples < 2 {
            return Err(Error::InsufficientData {
                needed: 2,
                got: n_samples,
            });
        }

        let k = eigenvalues.len();
        let total = stats::sum(&eigenvalues);
        let proportions: Vec<f64> = if total > 0.0 {
            eigenvalues.iter().map(|v| v / total).collect()
        } else {
            vec![1.0 / k as f64; k]
        };
        let mut running = 0.0;
        let cumulative: Vec<f64> = proportions
            .iter()
            .map(|p| {
                running += p;
                running
            })
            .collect();

        Ok(PcaModel {
            method,
            n_samples,
            column_means,
            column_std_devs,
            eigenvalues,
            components,
            proportions: NumericVector::from_vec_unchecked(proportions),
            cumulative_proportions: NumericVector::from_vec_unchecked(cumulative),
        })
    }

    pub fn method(&self) -> PcaMethod {
        self.method
    }

    /// Number of observations the model was fitted on.
    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn n_variables(&self) -> usize {
        self.column_means.len()
    }

    pub fn n_components(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn column_means(&self) -> &NumericVector {
        &self.column_means
    }

    pub fn column_std_devs(&self) -> Option<&NumericVector> {
        self.column_std_devs.as_ref()
    }

    /// Descending by absolute value.
    pub fn eigenvalues(&self) -> &NumericVector {
        &self.eigenvalues
    }

    /// `sqrt(lambda * (n - 1))` per component.
    pub fn singular_values(&self) -> NumericVector {
        let scale = (self.n_samples - 1) as f64;
        NumericVector::from_vec_unchecked(
            self.eigenvalues
                .iter()
                .map(|l| (l.max(0.0) * scale).sqrt())
                .collect(),
        )
    }

    /// Variables x components; each column is a principal direction.
    pub fn components(&self) -> &DenseMatrix {
        &self.components
    }

    pub fn proportions(&self) -> &NumericVector {
        &self.proportions
    }

    pub fn cumulative_proportions(&self) -> &NumericVector {
        &self.cumulative_proportions
    }

    /// Projects `data` onto the first `n_components` principal directions
    /// (all of them when `None`), using the means and standard deviations
    /// stored at fit time.
    pub fn transform(
        &self,
        data: &DenseMatrix,
        n_components: Option<usize>,
    ) -> Result<DenseMatrix> {
        if data.cols() != self.n_variables() {
            return Err(Error::DimensionMismatch {
                op: "transform",
                left: data.shape(),
                right: (1, self.n_variables()),
            });
        }
        let available = self.n_components();
        let k = n_components.unwrap_or(available);
        if k == 0 || k > available {
            return Err(Error::InvalidComponentCount {
                requested: k,
                available,
            });
        }
        self.prepare(data)?
            .matmul(&self.components.leading_columns(k))
    }

    /// Maps component scores back into the original variable space.
    ///
    /// `scores` may carry fewer columns than the model has components; the
    /// missing trailing components are treated as zero.
    pub fn inverse_transform(&self, scores: &DenseMatrix) -> Result<DenseMatrix> {
        let k = scores.cols();
        if k > self.n_components() {
            return Err(Error::DimensionMismatch {
                op: "inverse_transform",
                left: scores.shape(),
                right: self.components.shape(),
            });
        }
        let mut x = scores.multiply_by_transpose(&self.components.leading_columns(k))?;
        if let Some(sd) = &self.column_std_devs {
            x = x.multiply_row_vector(sd)?;
        }
        x.add_row_vector(&self.column_means)
    }

    pub fn component_report(&self) -> Vec<ComponentRecord> {
        let singular = self.singular_values();
        (0..self.n_components())
            .map(|i| ComponentRecord {
                index: i,
                eigenvalue: self.eigenvalues[i],
                singular_value: singular[i],
                proportion: self.proportions[i],
                cumulative_proportion: self.cumulative_proportions[i],
                direction: self.components.column(i),
            })
            .collect()
    }

    fn prepare(&self, data: &DenseMatrix) -> Result<DenseMatrix> {
        let centered = data.subtract_row_vector(&self.column_means)?;
        match &self.column_std_devs {
            Some(sd) => centered.divide_row_vector(sd),
            None => Ok(centered),
        }
    }
}
