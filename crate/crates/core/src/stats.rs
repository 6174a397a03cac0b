//! Descriptive statistics.
//!
//! Spread statistics use the sample normalization `n - 1`. Sums are plain
//! left-to-right accumulations so results are reproducible bit for bit.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::vector::NumericVector;

pub fn sum(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |acc, v| acc + v)
}

pub fn mean(x: &[f64]) -> Result<f64> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(sum(x) / x.len() as f64)
}

/// Sample variance. A supplied `mean` is trusted as-is.
pub fn variance(x: &[f64], mean: Option<f64>) -> Result<f64> {
    require_spread(x.len())?;
    let m = match mean {
        Some(m) => m,
        None => self::mean(x)?,
    };
    let ss = x.iter().fold(0.0, |acc, v| {
        let d = v - m;
        acc + d * d
    });
    Ok(ss / (x.len() - 1) as f64)
}

pub fn standard_deviation(x: &[f64], mean: Option<f64>) -> Result<f64> {
    variance(x, mean).map(f64::sqrt)
}

pub fn covariance(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    require_spread(x.len())?;
    Ok(centered_cross(x, mean(x)?, y, mean(y)?))
}

// The product is formed as (x - mx) * (y - my); multiplication commutes
// exactly, so swapping the arguments yields identical bits.
fn centered_cross(x: &[f64], mx: f64, y: &[f64], my: f64) -> f64 {
    let s = x
        .iter()
        .zip(y)
        .fold(0.0, |acc, (a, b)| acc + (a - mx) * (b - my));
    s / (x.len() - 1) as f64
}

pub fn column_sums(data: &DenseMatrix) -> NumericVector {
    let mut sums = vec![0.0; data.cols()];
    for row in data.row_iter() {
        for (s, v) in sums.iter_mut().zip(row) {
            *s += v;
        }
    }
    NumericVector::from_vec_unchecked(sums)
}

pub fn column_means(data: &DenseMatrix) -> Result<NumericVector> {
    if data.rows() == 0 {
        return Err(Error::EmptyInput);
    }
    let n = data.rows() as f64;
    let sums = column_sums(data);
    Ok(NumericVector::from_vec_unchecked(
        sums.iter().map(|s| s / n).collect(),
    ))
}

pub fn column_std_devs(data: &DenseMatrix) -> Result<NumericVector> {
    require_spread(data.rows())?;
    let means = column_means(data)?;
    let devs = (0..data.cols())
        .map(|j| standard_deviation(&data.column(j), Some(means[j])))
        .collect::<Result<Vec<_>>>()?;
    Ok(NumericVector::from_vec_unchecked(devs))
}

/// Sample covariance matrix of `data` (observations in rows).
///
/// Only the upper triangle is computed; the lower triangle is a copy, so the
/// result is exactly symmetric.
pub fn covariance_matrix(data: &DenseMatrix) -> Result<DenseMatrix> {
    require_spread(data.rows())?;
    let means = column_means(data)?;
    let columns: Vec<Vec<f64>> = (0..data.cols()).map(|j| data.column(j)).collect();
    let p = data.cols();
    let mut cov = DenseMatrix::zeros(p, p);
    for i in 0..p {
        for j in i..p {
            let c = centered_cross(&columns[i], means[i], &columns[j], means[j]);
            cov[(i, j)] = c;
            cov[(j, i)] = c;
        }
    }
    Ok(cov)
}

fn require_spread(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InsufficientData { needed: 2, got: n });
    }
    Ok(())
}
