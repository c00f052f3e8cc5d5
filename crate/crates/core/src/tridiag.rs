//! Symmetric tridiagonal eigen-helpers: Sturm-count bisection for the
//! largest eigenvalue and inverse iteration for its eigenvector.

/// Number of eigenvalues strictly below `x`, from the signs of the LDL^T
/// pivots of `T - xI`.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let scale = diag.iter().chain(off).fold(1.0f64, |m, v| m.max(v.abs()));
    let guard = f64::EPSILON * scale;
    let mut count = 0;
    let mut q = diag[0] - x;
    for i in 0..diag.len() {
        if i > 0 {
            q = diag[i] - x - off[i - 1] * off[i - 1] / q;
        }
        if q.abs() < guard {
            q = -guard;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing every eigenvalue.
fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    (lo, hi)
}

/// Largest eigenvalue, bisected down to a few ulps.
pub fn largest_eigenvalue(diag: &[f64], off: &[f64]) -> f64 {
    let n = diag.len();
    assert!(n > 0 && off.len() + 1 == n, "malformed tridiagonal matrix");
    if n == 1 {
        return diag[0];
    }
    let (mut lo, mut hi) = gershgorin(diag, off);
    let pad = 1e-12 * hi.abs().max(lo.abs()).max(1.0);
    lo -= pad;
    hi += pad;
    for _ in 0..256 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * hi.abs().max(1.0) {
            break;
        }
        if sturm_count(diag, off, mid) == n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solve `M y = b` for small dense `M` with partial pivoting, in place.
/// Exactly singular pivots are nudged so inverse iteration can proceed.
fn solve_dense(mut m: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    let tiny = f64::EPSILON * m.iter().flatten().fold(1.0f64, |a, v| a.max(v.abs()));
    for col in 0..n {
        let p = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        m.swap(col, p);
        b.swap(col, p);
        if m[col][col].abs() < tiny {
            m[col][col] = tiny;
        }
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            if f != 0.0 {
                let (top, bottom) = m.split_at_mut(r);
                for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                    *x -= f * y;
                }
                b[r] -= f * b[col];
            }
        }
    }
    for col in (0..n).rev() {
        let s: f64 = (col + 1..n).map(|c| m[col][c] * b[c]).sum();
        b[col] = (b[col] - s) / m[col][col];
    }
    b
}

/// Unit eigenvector for the eigenvalue `lambda` (assumed simple), signed so
/// its entries sum to a positive number.
pub fn eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    if n == 1 {
        return vec![1.0];
    }
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        m[i][i] = diag[i] - lambda;
        if i + 1 < n {
            m[i][i + 1] = off[i];
            m[i + 1][i] = off[i];
        }
    }
    let mut y = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..3 {
        y = solve_dense(m.clone(), y);
        let s = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= s);
    }
    if y.iter().sum::<f64>() < 0.0 {
        y.iter_mut().for_each(|v| *v = -*v);
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_adjacency_spectrum() {
        // P_n adjacency: largest eigenvalue 2 cos(pi / (n + 1))
        for n in 2..12 {
            let diag = vec![0.0; n];
            let off = vec![1.0; n - 1];
            let want = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((largest_eigenvalue(&diag, &off) - want).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn sturm_counts_match_known_spectrum() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let diag = [2.0, 2.0];
        let off = [1.0];
        assert_eq!(sturm_count(&diag, &off, 0.5), 0);
        assert_eq!(sturm_count(&diag, &off, 2.0), 1);
        assert_eq!(sturm_count(&diag, &off, 3.5), 2);
    }

    #[test]
    fn eigenvector_satisfies_equation() {
        let diag = [0.3, 1.2, 0.7, 2.0];
        let off = [0.9, 1.4, 0.5];
        let lam = largest_eigenvalue(&diag, &off);
        let y = eigenvector(&diag, &off, lam);
        for i in 0..4 {
            let mut r = diag[i] * y[i] - lam * y[i];
            if i > 0 {
                r += off[i - 1] * y[i - 1];
            }
            if i < 3 {
                r += off[i] * y[i + 1];
            }
            assert!(r.abs() < 1e-13);
        }
        assert!(y.iter().all(|&v| v > 0.0));
    }
}
