//! Eigenvalues of small dense symmetric and hermitian matrices (cyclic Jacobi).

use num_complex::Complex64;

/// Convergence threshold on the off-diagonal Frobenius norm.
pub const JACOBI_TOLERANCE: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric `n x n` matrix stored row-major, ascending.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix storage does not match dimension");
    let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= JACOBI_TOLERANCE * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Eigenvalues of a hermitian matrix, ascending.
///
/// Works on the real embedding `[[A, -B], [B, A]]` of `H = A + iB`, whose
/// spectrum is that of `H` with every eigenvalue doubled.
pub fn hermitian_eigenvalues<const D: usize>(h: &[[Complex64; D]; D]) -> Vec<f64> {
    let n = 2 * D;
    let mut m = vec![0.0; n * n];
    for i in 0..D {
        for j in 0..D {
            let z = h[i][j];
            m[i * n + j] = z.re;
            m[(i + D) * n + (j + D)] = z.re;
            m[i * n + (j + D)] = -z.im;
            m[(i + D) * n + j] = z.im;
        }
    }
    symmetric_eigenvalues(m, n).into_iter().step_by(2).collect()
}
