//! Dense eigensolver backend for the spectrum operation.
//!
//! Hermitian inputs (to 1e-12 per entry) go through the symmetric
//! tridiagonalization path, which also delivers eigenvectors; everything
//! else goes through a complex Schur decomposition with eigenvectors
//! recovered by shifted inverse iteration. Both paths are deterministic.

use nalgebra::{DMatrix, DVector};

use crate::error::Error;
use crate::op::C64;

/// Per-entry Hermiticity tolerance selecting the symmetric path.
const HERMITIAN_TOL: f64 = 1e-12;

pub(crate) struct EigenOutput {
    pub values: Vec<C64>,
    pub max_residual: f64,
}

fn max_iterations(dim: usize) -> usize {
    200 * dim + 2000
}

fn is_hermitian(m: &DMatrix<C64>) -> bool {
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tol = HERMITIAN_TOL * (1.0 + scale);
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            if (m[(i, j)] - m[(j, i)].conj()).norm() > tol {
                return false;
            }
        }
    }
    true
}

fn pair_residual(m: &DMatrix<C64>, value: C64, vector: &DVector<C64>) -> f64 {
    (m * vector - vector * value).norm()
}

/// Eigenvector by inverse iteration around a computed eigenvalue.
///
/// The shift is perturbed slightly off the eigenvalue so the factorization
/// stays regular; a nearly singular solve is exactly what drives the
/// iteration toward the eigenvector.
fn inverse_iteration(m: &DMatrix<C64>, value: C64) -> Option<DVector<C64>> {
    let n = m.nrows();
    let scale = 1.0 + value.norm();
    let mut offset = 1e-10 * scale;
    for _ in 0..4 {
        let shift = value + C64::new(offset, offset);
        let mut shifted = m.clone();
        for i in 0..n {
            shifted[(i, i)] -= shift;
        }
        let lu = shifted.lu();
        // deterministic, generically non-orthogonal start vector
        let mut v = DVector::from_fn(n, |i, _| C64::new(1.0 + 0.01 * i as f64, 0.0));
        v /= C64::new(v.norm(), 0.0);
        let mut ok = true;
        for _ in 0..3 {
            match lu.solve(&v) {
                Some(next) => {
                    let norm = next.norm();
                    if !norm.is_finite() || norm == 0.0 {
                        ok = false;
                        break;
                    }
                    v = next / C64::new(norm, 0.0);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Some(v);
        }
        offset *= 128.0;
    }
    None
}

pub(crate) fn eigen_dense(m: &DMatrix<C64>) -> Result<EigenOutput, Error> {
    let n = m.nrows();
    if n == 0 {
        return Ok(EigenOutput {
            values: Vec::new(),
            max_residual: 0.0,
        });
    }
    let iterations = max_iterations(n);
    let non_convergence = || Error::EigenNonConvergence {
        dim: n,
        max_iterations: iterations,
    };

    let mut values: Vec<C64>;
    let mut max_residual = 0.0f64;

    if is_hermitian(m) {
        let hermitized = (m + m.adjoint()).map(|z| z * C64::new(0.5, 0.0));
        let eigen = hermitized
            .try_symmetric_eigen(f64::EPSILON, iterations)
            .ok_or_else(non_convergence)?;
        values = Vec::with_capacity(n);
        for k in 0..n {
            let value = C64::new(eigen.eigenvalues[k], 0.0);
            let vector = DVector::from(eigen.eigenvectors.column(k).into_owned());
            max_residual = max_residual.max(pair_residual(m, value, &vector));
            values.push(value);
        }
    } else {
        let schur = m
            .clone()
            .try_schur(f64::EPSILON, iterations)
            .ok_or_else(non_convergence)?;
        let (_, t) = schur.unpack();
        values = (0..n).map(|i| t[(i, i)]).collect();
        for &value in &values {
            match inverse_iteration(m, value) {
                Some(vector) => {
                    max_residual = max_residual.max(pair_residual(m, value, &vector));
                }
                None => return Err(non_convergence()),
            }
        }
    }

    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(EigenOutput {
        values,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn diagonal_matrix_returns_sorted_diagonal() {
        let m = DMatrix::from_diagonal(&DVector::from_vec(vec![
            C64::new(3.0, 0.0),
            C64::new(-1.0, 0.0),
            C64::new(2.0, 0.0),
        ]));
        let out = eigen_dense(&m).unwrap();
        let re: Vec<f64> = out.values.iter().map(|z| z.re).collect();
        assert_eq!(re, vec![-1.0, 2.0, 3.0]);
        assert!(out.max_residual <= 1e-12);
    }

    #[test]
    fn hermitian_and_general_paths_agree() {
        // Hermitian input solved by both code paths
        let h = DMatrix::from_row_slice(
            3,
            3,
            &[
                C64::new(2.0, 0.0),
                C64::new(0.0, 1.0),
                C64::new(0.5, 0.0),
                C64::new(0.0, -1.0),
                C64::new(3.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.5, 0.0),
                C64::new(0.0, 0.0),
                C64::new(1.0, 0.0),
            ],
        );
        let hermitian = eigen_dense(&h).unwrap();
        // force the general path with an invisible non-Hermitian bump
        let mut tweaked = h.clone();
        tweaked[(0, 1)] += C64::new(1e-6, 0.0);
        let general = eigen_dense(&tweaked).unwrap();
        for (a, b) in hermitian.values.iter().zip(&general.values) {
            assert_relative_eq!(a.re, b.re, epsilon = 1e-4);
        }
        assert!(hermitian.max_residual <= 1e-10);
        assert!(general.max_residual <= 1e-8 * (1.0 + h.norm()));
    }

    #[test]
    fn known_complex_eigenvalues() {
        // [[0, -1], [1, 0]] rotated by i has eigenvalues +-i
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(0.0, 0.0),
                C64::new(-1.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(0.0, 0.0),
            ],
        );
        let out = eigen_dense(&m).unwrap();
        assert_relative_eq!(out.values[0].im, -1.0, epsilon = 1e-10);
        assert_relative_eq!(out.values[1].im, 1.0, epsilon = 1e-10);
        assert!(out.max_residual <= 1e-8);
    }

    #[test]
    fn trace_matches_eigenvalue_sum() {
        let m = DMatrix::from_fn(6, 6, |i, j| {
            C64::new(((i * 5 + j * 3) % 7) as f64, ((i + 2 * j) % 3) as f64)
        });
        let out = eigen_dense(&m).unwrap();
        let sum: C64 = out.values.iter().sum();
        let trace: C64 = (0..6).map(|i| m[(i, i)]).sum();
        assert_relative_eq!(sum.re, trace.re, epsilon = 1e-9);
        assert_relative_eq!(sum.im, trace.im, epsilon = 1e-9);
    }
}
