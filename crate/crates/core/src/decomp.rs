//! Symmetric eigendecomposition and singular value decomposition.
//!
//! Both factorizations are built on plane (Jacobi) rotations:
//!
//! * [`eig_symmetric`] runs cyclic two-sided Jacobi sweeps on a symmetric
//!   matrix until the off-diagonal mass is negligible.
//! * [`svd`] runs one-sided (Hestenes) Jacobi on the columns of the taller
//!   orientation of the input. It never forms `A^t A`, so small singular
//!   values keep their relative accuracy.
//!
//! Eigenvector and right-singular-vector columns are returned in a canonical
//! sign: the entry of largest magnitude (first one on ties) is positive.

use crate::error::{Error, Result};
use crate::matrix::{dot, DenseMatrix};
use crate::vector::NumericVector;

/// Sweep cap shared by both Jacobi kernels.
pub const MAX_SWEEPS: usize = 64;

/// Off-diagonal Frobenius norm, relative to the full Frobenius norm, below
/// which the eigen iteration stops.
pub const EIG_TOLERANCE: f64 = 1e-14;

/// Relative asymmetry above which [`eig_symmetric`] rejects its input.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub eigenvalues: NumericVector,
    /// Eigenvector `j` is column `j`.
    pub eigenvectors: DenseMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvdResult {
    /// Non-negative, non-increasing.
    pub singular_values: NumericVector,
    /// `m x min(m, n)`
    pub left_vectors: DenseMatrix,
    /// `n x min(m, n)`
    pub right_vectors: DenseMatrix,
}

impl SvdResult {
    /// `U * diag(sigma) * V^t`
    pub fn reconstruct(&self) -> DenseMatrix {
        self.left_vectors
            .multiply_by_diagonal(&self.singular_values)
            .and_then(|us| us.multiply_by_transpose(&self.right_vectors))
            .expect("factor shapes are consistent")
    }
}

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Eigenvalues come out in the order the iteration leaves them on the
/// diagonal; use [`sort_eigenpairs_desc_abs`] for a defined order.
pub fn eig_symmetric(a: &DenseMatrix) -> Result<EigenResult> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let scale = a.max_abs();
    let mut asymmetry = 0.0_f64;
    for i in 0..n {
        for j in i + 1..n {
            asymmetry = asymmetry.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    if asymmetry > SYMMETRY_TOLERANCE * scale {
        return Err(Error::NotSymmetric { asymmetry });
    }

    let mut w = a.clone();
    // Mirror the upper triangle so the working copy is exactly symmetric.
    for i in 0..n {
        for j in i + 1..n {
            w[(j, i)] = w[(i, j)];
        }
    }
    let mut v = DenseMatrix::identity(n);
    let threshold = EIG_TOLERANCE * a.frobenius_norm();

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&w) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if w[(p, q)] != 0.0 {
                    rotate_symmetric(&mut w, &mut v, p, q);
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let eigenvalues = NumericVector::from_vec_unchecked((0..n).map(|i| w[(i, i)]).collect());
    canonicalize_signs(&mut v);
    Ok(EigenResult {
        eigenvalues,
        eigenvectors: v,
    })
}

fn off_diagonal_norm(w: &DenseMatrix) -> f64 {
    let n = w.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += w[(i, j)] * w[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Cosine and sine of the rotation that zeroes the off-diagonal entry of
/// the symmetric 2x2 block `[[app, apq], [apq, aqq]]`.
fn rotation(app: f64, aqq: f64, apq: f64) -> (f64, f64, f64) {
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    (c, t * c, t)
}

fn rotate_symmetric(w: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let n = w.rows();
    let apq = w[(p, q)];
    let (c, s, t) = rotation(w[(p, p)], w[(q, q)], apq);

    w[(p, p)] -= t * apq;
    w[(q, q)] += t * apq;
    w[(p, q)] = 0.0;
    w[(q, p)] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = w[(k, p)];
        let akq = w[(k, q)];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        w[(k, p)] = new_p;
        w[(p, k)] = new_p;
        w[(k, q)] = new_q;
        w[(q, k)] = new_q;
    }
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Flips columns so that each column's largest-magnitude entry is positive.
///
/// Returns the applied signs (`1.0` or `-1.0` per column).
pub fn canonicalize_signs(m: &mut DenseMatrix) -> Vec<f64> {
    let mut signs = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        let mut best = 0.0_f64;
        let mut best_value = 0.0;
        for i in 0..m.rows() {
            let x = m[(i, j)];
            if x.abs() > best {
                best = x.abs();
                best_value = x;
            }
        }
        let sign = if best_value < 0.0 { -1.0 } else { 1.0 };
        if sign < 0.0 {
            for i in 0..m.rows() {
                m[(i, j)] = -m[(i, j)];
            }
        }
        signs.push(sign);
    }
    signs
}

/// Reorders eigenpairs by descending `|lambda|`; ties keep their order.
pub fn sort_eigenpairs_desc_abs(e: EigenResult) -> EigenResult {
    let order = descending_order(&e.eigenvalues, f64::abs);
    let eigenvalues =
        NumericVector::from_vec_unchecked(order.iter().map(|&i| e.eigenvalues[i]).collect());
    let eigenvectors = permute_columns(&e.eigenvectors, &order);
    EigenResult {
        eigenvalues,
        eigenvectors,
    }
}

fn descending_order(values: &[f64], key: impl Fn(f64) -> f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| key(values[b]).total_cmp(&key(values[a])));
    order
}

fn permute_columns(m: &DenseMatrix, order: &[usize]) -> DenseMatrix {
    let mut data = Vec::with_capacity(m.rows() * order.len());
    for row in m.row_iter() {
        data.extend(order.iter().map(|&j| row[j]));
    }
    DenseMatrix::from_raw(m.rows(), order.len(), data)
}

/// `V * diag(lambda) * V^t`
pub fn reconstruct(e: &EigenResult) -> DenseMatrix {
    e.eigenvectors
        .multiply_by_diagonal(&e.eigenvalues)
        .and_then(|vl| vl.multiply_by_transpose(&e.eigenvectors))
        .expect("eigenvector count matches eigenvalue count")
}

/// Covariance eigenvalues from the singular values of centered data:
/// `sigma^2 / (n_rows - 1)`.
pub fn singular_values_to_eigenvalues(sigma: &[f64], n_rows: usize) -> Result<NumericVector> {
    if n_rows < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: n_rows,
        });
    }
    let denom = (n_rows - 1) as f64;
    Ok(NumericVector::from_vec_unchecked(
        sigma.iter().map(|s| s * s / denom).collect(),
    ))
}

/// Thin singular value decomposition `A = U * diag(sigma) * V^t`.
pub fn svd(a: &DenseMatrix) -> Result<SvdResult> {
    let (mut u, sigma, mut v) = if a.rows() >= a.cols() {
        hestenes(a)?
    } else {
        let (u, s, v) = hestenes(&a.transpose())?;
        (v, s, u)
    };
    let signs = canonicalize_signs(&mut v);
    for (j, sign) in signs.into_iter().enumerate() {
        if sign < 0.0 {
            for i in 0..u.rows() {
                u[(i, j)] = -u[(i, j)];
            }
        }
    }
    Ok(SvdResult {
        singular_values: NumericVector::from_vec_unchecked(sigma),
        left_vectors: u,
        right_vectors: v,
    })
}

/// One-sided Jacobi on a matrix with `rows >= cols`.
fn hestenes(a: &DenseMatrix) -> Result<(DenseMatrix, Vec<f64>, DenseMatrix)> {
    let (m, n) = a.shape();
    debug_assert!(m >= n);
    let mut cols: Vec<Vec<f64>> = (0..n).map(|j| a.column(j)).collect();
    let mut vcols: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    // Columns shorter than this are numerically zero and no longer rotated.
    let floor = f64::EPSILON * a.frobenius_norm();
    let floor_sq = floor * floor;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = dot(&cols[p], &cols[p]);
                let beta = dot(&cols[q], &cols[q]);
                let gamma = dot(&cols[p], &cols[q]);
                if alpha <= floor_sq
                    || beta <= floor_sq
                    || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt()
                {
                    continue;
                }
                rotated = true;
                let (c, s, _) = rotation(alpha, beta, gamma);
                rotate_pair(&mut cols, p, q, c, s);
                rotate_pair(&mut vcols, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let norms: Vec<f64> = cols.iter().map(|c| dot(c, c).sqrt()).collect();
    let order = descending_order(&norms, |x| x);
    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let sigma_max = sigma.first().copied().unwrap_or(0.0);
    let negligible = sigma_max * f64::EPSILON * m as f64;

    let mut left: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut deficient = Vec::new();
    for (k, &j) in order.iter().enumerate() {
        if sigma[k] > negligible && sigma[k] > 0.0 {
            left.push(cols[j].iter().map(|x| x / sigma[k]).collect());
        } else {
            left.push(vec![0.0; m]);
            deficient.push(k);
        }
    }
    complete_orthonormal(&mut left, &deficient);

    let mut u = DenseMatrix::zeros(m, n);
    let mut v = DenseMatrix::zeros(n, n);
    for (k, &j) in order.iter().enumerate() {
        for i in 0..m {
            u[(i, k)] = left[k][i];
        }
        for i in 0..n {
            v[(i, k)] = vcols[j][i];
        }
    }
    Ok((u, sigma, v))
}

fn rotate_pair(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (head, tail) = cols.split_at_mut(q);
    let (cp, cq) = (&mut head[p], &mut tail[0]);
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let (xp, xq) = (*x, *y);
        *x = c * xp - s * xq;
        *y = s * xp + c * xq;
    }
}

/// Replaces the columns listed in `missing` with unit vectors orthogonal to
/// every other column. Each replacement is the standard basis vector with the
/// largest residual after two rounds of Gram-Schmidt.
fn complete_orthonormal(cols: &mut [Vec<f64>], missing: &[usize]) {
    let Some(m) = cols.first().map(Vec::len) else {
        return;
    };
    for &k in missing {
        let mut best: Option<(f64, Vec<f64>)> = None;
        for candidate in 0..m {
            let mut e = vec![0.0; m];
            e[candidate] = 1.0;
            for _ in 0..2 {
                for (idx, c) in cols.iter().enumerate() {
                    if idx == k {
                        continue;
                    }
                    let proj = dot(&e, c);
                    for (x, y) in e.iter_mut().zip(c) {
                        *x -= proj * y;
                    }
                }
            }
            let norm = dot(&e, &e).sqrt();
            if best.as_ref().is_none_or(|(b, _)| norm > *b) {
                best = Some((norm, e));
            }
        }
        let (norm, e) = best.expect("at least one candidate");
        cols[k] = e.into_iter().map(|x| x / norm).collect();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_rows(rows).unwrap()
    }

    fn xy10_centered() -> DenseMatrix {
        m(&[
            &[0.69, 0.49],
            &[-1.31, -1.21],
            &[0.39, 0.99],
            &[0.09, 0.29],
            &[1.29, 1.09],
            &[0.49, 0.79],
            &[0.19, -0.31],
            &[-0.81, -0.81],
            &[-0.31, -0.31],
            &[-0.71, -1.01],
        ])
    }

    fn parallel(a: &[f64], b: &[f64], tol: f64) -> bool {
        let c = dot(a, b) / (dot(a, a).sqrt() * dot(b, b).sqrt());
        c.abs() >= 1.0 - tol
    }

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn eig_of_listing_matrix() {
        let a = m(&[&[3.0, 2.0, 4.0], &[2.0, 0.0, 2.0], &[4.0, 2.0, 3.0]]);
        let e = eig_symmetric(&a).unwrap();
        let ev = sorted(e.eigenvalues.to_vec());
        for (x, y) in ev.iter().zip([-1.0, -1.0, 8.0]) {
            assert!((x - y).abs() < 1e-9);
        }
        let r = reconstruct(&e);
        for (x, y) in r.as_slice().iter().zip(a.as_slice()) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn eig_of_xy10_covariance() {
        let c = m(&[&[0.6165555556, 0.6154444444], &[0.6154444444, 0.7165555556]]);
        let e = sort_eigenpairs_desc_abs(eig_symmetric(&c).unwrap());
        assert!((e.eigenvalues[0] - 1.2840277122).abs() < 1e-9);
        assert!((e.eigenvalues[1] - 0.0490833989).abs() < 1e-9);
        assert!(parallel(
            &e.eigenvectors.column(0),
            &[0.6778733985, 0.7351786555],
            1e-9
        ));
    }

    #[test]
    fn eig_of_diagonal() {
        let e = eig_symmetric(&DenseMatrix::from_diagonal(&[3.0, -7.0, 0.5])).unwrap();
        assert_eq!(e.eigenvalues.as_slice(), &[3.0, -7.0, 0.5]);
        assert_eq!(e.eigenvectors, DenseMatrix::identity(3));
    }

    #[test]
    fn eig_rejects_bad_input() {
        assert!(matches!(
            eig_symmetric(&DenseMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(
            eig_symmetric(&m(&[&[1.0, 2.0], &[3.0, 4.0]])),
            Err(Error::NotSymmetric { .. })
        ));
        let z = eig_symmetric(&DenseMatrix::zeros(2, 2)).unwrap();
        assert_eq!(z.eigenvalues.as_slice(), &[0.0, 0.0]);
    }

    #[test]
    fn sorting_eigenpairs() {
        let e = EigenResult {
            eigenvalues: NumericVector::new(vec![0.0490833989, 1.2840277122]).unwrap(),
            eigenvectors: m(&[&[1.0, 2.0], &[3.0, 4.0]]),
        };
        let s = sort_eigenpairs_desc_abs(e.clone());
        assert_eq!(s.eigenvalues.as_slice(), &[1.2840277122, 0.0490833989]);
        assert_eq!(s.eigenvectors, m(&[&[2.0, 1.0], &[4.0, 3.0]]));
        assert_eq!(sort_eigenpairs_desc_abs(s.clone()), s);

        let e = EigenResult {
            eigenvalues: NumericVector::new(vec![-1.0, -1.0, 8.0]).unwrap(),
            eigenvectors: m(&[&[1.0, 2.0, 3.0]]),
        };
        let s = sort_eigenpairs_desc_abs(e);
        assert_eq!(s.eigenvalues.as_slice(), &[8.0, -1.0, -1.0]);
        assert_eq!(s.eigenvectors, m(&[&[3.0, 1.0, 2.0]]));
    }

    #[test]
    fn reconstruct_cases() {
        let e = EigenResult {
            eigenvalues: NumericVector::new(vec![2.0, -3.0]).unwrap(),
            eigenvectors: DenseMatrix::identity(2),
        };
        assert_eq!(reconstruct(&e), DenseMatrix::from_diagonal(&[2.0, -3.0]));

        let a = m(&[&[3.0, 2.0, 4.0], &[2.0, 0.0, 2.0], &[4.0, 2.0, 3.0]]);
        let e = eig_symmetric(&a).unwrap();
        let before = reconstruct(&e);
        let after = reconstruct(&sort_eigenpairs_desc_abs(e));
        for (x, y) in before.as_slice().iter().zip(after.as_slice()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn svd_of_xy10_centered() {
        let s = svd(&xy10_centered()).unwrap();
        assert!((s.singular_values[0] - 3.3994483978).abs() < 1e-9);
        assert!((s.singular_values[1] - 0.6646432054).abs() < 1e-9);
        assert!(parallel(
            &s.right_vectors.column(0),
            &[0.6778733985, 0.7351786555],
            1e-9
        ));
        assert!(parallel(
            &s.right_vectors.column(1),
            &[-0.7351786555, 0.6778733985],
            1e-9
        ));
    }

    #[test]
    fn svd_trivial_cases() {
        let s = svd(&DenseMatrix::from_diagonal(&[3.0, 2.0])).unwrap();
        assert_eq!(s.singular_values.as_slice(), &[3.0, 2.0]);
        assert_eq!(s.left_vectors, DenseMatrix::identity(2));
        assert_eq!(s.right_vectors, DenseMatrix::identity(2));

        let s = svd(&DenseMatrix::zeros(3, 2)).unwrap();
        assert_eq!(s.singular_values.as_slice(), &[0.0, 0.0]);
        let utu = s.left_vectors.transpose().matmul(&s.left_vectors).unwrap();
        assert_eq!(utu, DenseMatrix::identity(2));
    }

    #[test]
    fn svd_wide_matrix() {
        let a = m(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]);
        let s = svd(&a).unwrap();
        assert_eq!(s.left_vectors.shape(), (2, 2));
        assert_eq!(s.right_vectors.shape(), (3, 2));
        for (x, y) in s.reconstruct().as_slice().iter().zip(a.as_slice()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_values_to_eigenvalues_cases() {
        let ev = singular_values_to_eigenvalues(&[3.3994483978, 0.6646432054], 10).unwrap();
        assert!((ev[0] - 1.2840277122).abs() < 1e-9);
        assert!((ev[1] - 0.0490833989).abs() < 1e-9);
        assert_eq!(
            singular_values_to_eigenvalues(&[0.0, 0.0], 5)
                .unwrap()
                .as_slice(),
            &[0.0, 0.0]
        );
        assert_eq!(
            singular_values_to_eigenvalues(&[3.0], 2)
                .unwrap()
                .as_slice(),
            &[9.0]
        );
        assert!(matches!(
            singular_values_to_eigenvalues(&[3.0], 1),
            Err(Error::InsufficientData { .. })
        ));
    }

    #[test]
    fn canonical_signs_are_idempotent() {
        let mut a = m(&[&[0.6, -0.8], &[-0.8, -0.6]]);
        let first = canonicalize_signs(&mut a);
        assert_eq!(first, vec![-1.0, -1.0]);
        let once = a.clone();
        canonicalize_signs(&mut a);
        assert_eq!(a, once);
    }
}
