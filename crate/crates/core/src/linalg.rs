//! Small dense f64 kernels for the MLP.
//!
//! Loop orders are chosen so the innermost loop runs over contiguous output
//! columns and auto-vectorizes. Every output row depends only on the matching
//! input row, so batched evaluation is bit-identical to row-at-a-time
//! evaluation.

/// `c[m, n] += a[m, k] * b[k, n]`, all row-major.
pub(crate) fn matmul_acc(m: usize, k: usize, n: usize, a: &[f64], b: &[f64], c: &mut [f64]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    for i in 0..m {
        let a_row = &a[i * k..(i + 1) * k];
        let c_row = &mut c[i * n..(i + 1) * n];
        for (kk, &aik) in a_row.iter().enumerate() {
            let b_row = &b[kk * n..(kk + 1) * n];
            for j in 0..n {
                c_row[j] += aik * b_row[j];
            }
        }
    }
}

/// `c[k, n] += a[m, k]^T * b[m, n]`, all row-major (weight-gradient shape).
pub(crate) fn matmul_at_b_acc(m: usize, k: usize, n: usize, a: &[f64], b: &[f64], c: &mut [f64]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), m * n);
    debug_assert_eq!(c.len(), k * n);
    for i in 0..m {
        let a_row = &a[i * k..(i + 1) * k];
        let b_row = &b[i * n..(i + 1) * n];
        for (kk, &aik) in a_row.iter().enumerate() {
            let c_row = &mut c[kk * n..(kk + 1) * n];
            for j in 0..n {
                c_row[j] += aik * b_row[j];
            }
        }
    }
}

/// Row-major transpose of an `m x n` matrix.
pub(crate) fn transpose(m: usize, n: usize, a: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), m * n);
    let mut out = vec![0.0; m * n];
    for i in 0..m {
        for j in 0..n {
            out[j * m + i] = a[i * n + j];
        }
    }
    out
}

/// In-place Cholesky factor (lower triangular) of a `d x d` SPD matrix.
/// Returns `None` when the matrix is not positive definite.
pub(crate) fn cholesky(d: usize, a: &[f64]) -> Option<Vec<f64>> {
    debug_assert_eq!(a.len(), d * d);
    let mut l = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..=i {
            let mut sum = a[i * d + j];
            for k in 0..j {
                sum -= l[i * d + k] * l[j * d + k];
            }
            if i == j {
                if sum <= 0.0 || !sum.is_finite() {
                    return None;
                }
                l[i * d + i] = sum.sqrt();
            } else {
                l[i * d + j] = sum / l[j * d + j];
            }
        }
    }
    Some(l)
}

/// Solve `L L^T x = b` given the lower Cholesky factor `L`.
pub(crate) fn cholesky_solve(d: usize, l: &[f64], b: &[f64], x: &mut [f64]) {
    debug_assert_eq!(b.len(), d);
    // Forward substitution L y = b.
    for i in 0..d {
        let mut sum = b[i];
        for k in 0..i {
            sum -= l[i * d + k] * x[k];
        }
        x[i] = sum / l[i * d + i];
    }
    // Back substitution L^T x = y.
    for i in (0..d).rev() {
        let mut sum = x[i];
        for k in i + 1..d {
            sum -= l[k * d + i] * x[k];
        }
        x[i] = sum / l[i * d + i];
    }
}

/// `ln det(L L^T) = 2 * sum(ln diag(L))`.
pub(crate) fn cholesky_log_det(d: usize, l: &[f64]) -> f64 {
    (0..d).map(|i| l[i * d + i].ln()).sum::<f64>() * 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_matches_naive() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]; // 2x3
        let b = [7.0, 8.0, 9.0, 10.0, 11.0, 12.0]; // 3x2
        let mut c = vec![0.0; 4];
        matmul_acc(2, 3, 2, &a, &b, &mut c);
        assert_eq!(c, vec![58.0, 64.0, 139.0, 154.0]);
    }

    #[test]
    fn at_b_matches_transposed_product() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0]; // 3x2
        let b = [1.0, 0.0, 2.0, 1.0, 0.0, 3.0]; // 3x2
        let mut c = vec![0.0; 4];
        matmul_at_b_acc(3, 2, 2, &a, &b, &mut c);
        let at = transpose(3, 2, &a);
        let mut expect = vec![0.0; 4];
        matmul_acc(2, 3, 2, &at, &b, &mut expect);
        assert_eq!(c, expect);
    }

    #[test]
    fn cholesky_roundtrip() {
        let a = [4.0, 2.0, 2.0, 3.0];
        let l = cholesky(2, &a).unwrap();
        // Reconstruct A = L L^T.
        let mut back = [0.0; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    back[i * 2 + j] += l[i * 2 + k] * l[j * 2 + k];
                }
            }
        }
        for (x, y) in back.iter().zip(a.iter()) {
            assert!((x - y).abs() < 1e-12);
        }
        let mut x = [0.0; 2];
        cholesky_solve(2, &l, &[1.0, 1.0], &mut x);
        // A x = b check.
        assert!((4.0 * x[0] + 2.0 * x[1] - 1.0).abs() < 1e-12);
        assert!((2.0 * x[0] + 3.0 * x[1] - 1.0).abs() < 1e-12);
        // det = 4*3 - 2*2 = 8.
        assert!((cholesky_log_det(2, &l) - 8.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        assert!(cholesky(2, &[1.0, 2.0, 2.0, 1.0]).is_none());
    }
}
