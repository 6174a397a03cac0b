use std::ops::Deref;

use crate::error::{Error, Result};

/// Ordered sequence of finite reals.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NumericVector(Vec<f64>);

impl NumericVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(NumericVector(values))
    }

    /// Wraps values produced by this crate's own kernels.
    pub(crate) fn from_vec_unchecked(values: Vec<f64>) -> Self {
        NumericVector(values)
    }

    pub fn zeros(len: usize) -> Self {
        NumericVector(vec![0.0; len])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// Every entry divided by `divisor`.
    pub fn scalar_divide(&self, divisor: f64) -> Result<Self> {
        if divisor == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(NumericVector(self.0.iter().map(|v| v / divisor).collect()))
    }

    /// Every entry raised to `exponent`.
    pub fn powf(&self, exponent: f64) -> Self {
        NumericVector(self.0.iter().map(|v| v.powf(exponent)).collect())
    }
}

impl Deref for NumericVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for NumericVector {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        NumericVector::new(values)
    }
}

impl TryFrom<&[f64]> for NumericVector {
    type Error = Error;

    fn try_from(values: &[f64]) -> Result<Self> {
        NumericVector::new(values.to_vec())
    }
}
