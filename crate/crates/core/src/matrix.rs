//! Row-major dense matrices.
//!
//! Observations are stored in rows and variables in columns throughout the
//! crate. Operations are named methods returning new matrices; inputs are
//! never modified.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::decomp;
use crate::error::{Error, Result};
use crate::format::{format_number, NumberFormat};
use crate::vector::NumericVector;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

/// Entrywise binary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementwiseOp {
    Multiply,
    Divide,
    Power,
}

impl DenseMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::InvalidShape {
                rows,
                cols,
                len: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    /// Builds a matrix from a slice of equally long rows.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    left: cols,
                    right: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        DenseMatrix::new(rows.len(), cols, data)
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        DenseMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        DenseMatrix::from_raw(rows, cols, vec![0.0; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Square matrix with `diagonal` on its main diagonal.
    pub fn from_diagonal(diagonal: &[f64]) -> Self {
        let mut m = DenseMatrix::zeros(diagonal.len(), diagonal.len());
        for (i, &d) in diagonal.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// `n x 1` matrix holding `values`.
    pub fn column_vector(values: &[f64]) -> Result<Self> {
        DenseMatrix::new(values.len(), 1, values.to_vec())
    }

    /// Matrix whose every row is `row`.
    pub fn repeat_row(row: &[f64], times: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(row.len() * times);
        for _ in 0..times {
            data.extend_from_slice(row);
        }
        DenseMatrix::new(times, row.len(), data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.cols)
    }

    /// The first `k` columns.
    pub fn leading_columns(&self, k: usize) -> DenseMatrix {
        assert!(k >= 1 && k <= self.cols, "column count out of range");
        let mut out = Vec::with_capacity(self.rows * k);
        for row in self.row_iter() {
            out.extend_from_slice(&row[..k]);
        }
        DenseMatrix::from_raw(self.rows, k, out)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> DenseMatrix {
        DenseMatrix::from_raw(
            self.rows,
            self.cols,
            self.data.iter().map(|&v| f(v)).collect(),
        )
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self[(i, j)]);
            }
        }
        DenseMatrix::from_raw(self.cols, self.rows, out)
    }

    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(self.mismatch("matmul", other));
        }
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = 0.0;
                for (k, &a) in row.iter().enumerate() {
                    acc += a * other[(k, j)];
                }
                out.push(acc);
            }
        }
        Ok(DenseMatrix::from_raw(self.rows, other.cols, out))
    }

    /// `self * other^t` without forming the transpose.
    pub fn multiply_by_transpose(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.cols {
            return Err(self.mismatch("multiply_by_transpose", other));
        }
        let mut out = Vec::with_capacity(self.rows * other.rows);
        for a in self.row_iter() {
            for b in other.row_iter() {
                out.push(dot(a, b));
            }
        }
        Ok(DenseMatrix::from_raw(self.rows, other.rows, out))
    }

    pub fn matvec(&self, x: &[f64]) -> Result<NumericVector> {
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch {
                op: "matvec",
                left: self.shape(),
                right: (x.len(), 1),
            });
        }
        Ok(NumericVector::from_vec_unchecked(
            self.row_iter().map(|row| dot(row, x)).collect(),
        ))
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.zip_with("add", other, |a, b| a + b)
    }

    pub fn subtract(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.zip_with("subtract", other, |a, b| a - b)
    }

    /// Subtracts `v` from every row.
    pub fn subtract_row_vector(&self, v: &[f64]) -> Result<DenseMatrix> {
        self.broadcast_rows("subtract_row_vector", v, |a, b| a - b)
    }

    /// Divides every row entrywise by `v`.
    pub fn divide_row_vector(&self, v: &[f64]) -> Result<DenseMatrix> {
        if v.contains(&0.0) {
            return Err(Error::DivisionByZero);
        }
        self.broadcast_rows("divide_row_vector", v, |a, b| a / b)
    }

    pub fn add_row_vector(&self, v: &[f64]) -> Result<DenseMatrix> {
        self.broadcast_rows("add_row_vector", v, |a, b| a + b)
    }

    pub fn multiply_row_vector(&self, v: &[f64]) -> Result<DenseMatrix> {
        self.broadcast_rows("multiply_row_vector", v, |a, b| a * b)
    }

    pub fn elementwise(&self, other: &DenseMatrix, op: ElementwiseOp) -> Result<DenseMatrix> {
        match op {
            ElementwiseOp::Multiply => self.zip_with("elementwise multiply", other, |a, b| a * b),
            ElementwiseOp::Divide => {
                if self.shape() == other.shape() && other.data.contains(&0.0) {
                    return Err(Error::DivisionByZero);
                }
                self.zip_with("elementwise divide", other, |a, b| a / b)
            }
            ElementwiseOp::Power => self.zip_with("elementwise power", other, f64::powf),
        }
    }

    /// Every entry raised to a scalar exponent.
    pub fn elementwise_power_scalar(&self, exponent: f64) -> DenseMatrix {
        self.map(|v| v.powf(exponent))
    }

    pub fn scalar_divide(&self, divisor: f64) -> Result<DenseMatrix> {
        if divisor == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.map(|v| v / divisor))
    }

    pub fn scalar_multiply(&self, factor: f64) -> DenseMatrix {
        self.map(|v| v * factor)
    }

    /// `self * diag(d)`: column `j` scaled by `d[j]`.
    pub fn multiply_by_diagonal(&self, d: &[f64]) -> Result<DenseMatrix> {
        if self.cols != d.len() {
            return Err(Error::DimensionMismatch {
                op: "multiply_by_diagonal",
                left: self.shape(),
                right: (d.len(), d.len()),
            });
        }
        let data = self
            .row_iter()
            .flat_map(|row| row.iter().zip(d).map(|(v, s)| v * s))
            .collect();
        Ok(DenseMatrix::from_raw(self.rows, self.cols, data))
    }

    /// Gauss-Jordan elimination with partial pivoting.
    ///
    /// A pivot smaller than `1e-12 * max|a_ij|` is treated as singular.
    pub fn inverse(&self) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let tolerance = 1e-12 * self.max_abs();
        if tolerance == 0.0 {
            return Err(Error::Singular);
        }
        let mut a = self.clone();
        let mut inv = DenseMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&r, &s| a[(r, col)].abs().total_cmp(&a[(s, col)].abs()))
                .unwrap();
            if a[(pivot_row, col)].abs() < tolerance {
                return Err(Error::Singular);
            }
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);

            let pivot = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= pivot;
                inv[(col, j)] /= pivot;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[(r, col)];
                if factor == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[(r, j)] -= factor * a[(col, j)];
                    inv[(r, j)] -= factor * inv[(col, j)];
                }
            }
        }
        Ok(inv)
    }

    /// Right division `self * other^-1` for square nonsingular `other`.
    pub fn divide(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(self.mismatch("divide", other));
        }
        self.matmul(&other.inverse()?)
    }

    /// Moore-Penrose pseudo-inverse from the thin SVD.
    ///
    /// Singular values below `max(rows, cols) * eps * sigma_max` are treated
    /// as zero.
    pub fn pseudo_inverse(&self) -> Result<DenseMatrix> {
        let svd = decomp::svd(self)?;
        let sigma_max = svd.singular_values.first().copied().unwrap_or(0.0);
        let tolerance = self.rows.max(self.cols) as f64 * f64::EPSILON * sigma_max;
        let inv_sigma: Vec<f64> = svd
            .singular_values
            .iter()
            .map(|&s| {
                if s > tolerance && s > 0.0 {
                    1.0 / s
                } else {
                    0.0
                }
            })
            .collect();
        // V * diag(1/sigma) * U^t
        svd.right_vectors
            .multiply_by_diagonal(&inv_sigma)?
            .multiply_by_transpose(&svd.left_vectors)
    }

    /// Renders the matrix as text: one line per row, entries separated by a
    /// single space.
    pub fn to_text(&self, format: NumberFormat) -> String {
        let mut out = String::new();
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|&v| format_number(v, format)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn zip_with(
        &self,
        op: &'static str,
        other: &DenseMatrix,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<DenseMatrix> {
        if self.shape() != other.shape() {
            return Err(self.mismatch(op, other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(DenseMatrix::from_raw(self.rows, self.cols, data))
    }

    fn broadcast_rows(
        &self,
        op: &'static str,
        v: &[f64],
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<DenseMatrix> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: (1, v.len()),
            });
        }
        let data = self
            .row_iter()
            .flat_map(|row| row.iter().zip(v).map(|(&a, &b)| f(a, b)))
            .collect();
        Ok(DenseMatrix::from_raw(self.rows, self.cols, data))
    }

    fn mismatch(&self, op: &'static str, other: &DenseMatrix) -> Error {
        Error::DimensionMismatch {
            op,
            left: self.shape(),
            right: other.shape(),
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |acc, (x, y)| acc + x * y)
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
