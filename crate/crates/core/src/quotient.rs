//! Equitable-partition reduction of sequential clique joins.
//!
//! The cells of `K_{n0} v ... v K_{nd}` form an equitable partition, so the
//! spectral radius of the whole graph equals that of the `(d+1) x (d+1)`
//! tridiagonal quotient `B`. `B` is not symmetric, but `S B S^-1` with
//! `S = diag(sqrt(n_i))` is, and that symmetric form is what gets solved.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::JoinSpec;
use crate::spectra::Alpha;
use crate::tridiag;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    pub cell_sizes: Vec<usize>,
    pub entries: Vec<Vec<f64>>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.cell_sizes.len()
    }

    /// Diagonal and off-diagonal of `S B S^-1`.
    pub fn symmetrized(&self) -> (Vec<f64>, Vec<f64>) {
        let diag = (0..self.dim()).map(|i| self.entries[i][i]).collect();
        let off = (1..self.dim())
            .map(|i| (self.entries[i - 1][i] * self.entries[i][i - 1]).sqrt())
            .collect();
        (diag, off)
    }
}

pub fn quotient_matrix(spec: &JoinSpec, a: Alpha) -> QuotientMatrix {
    let p = spec.parts();
    let m = p.len();
    let al = a.value();
    let w = a.adjacency_weight();
    let size = |i: isize| -> f64 {
        if i < 0 || i as usize >= m {
            0.0
        } else {
            p[i as usize] as f64
        }
    };
    let mut entries = vec![vec![0.0; m]; m];
    for i in 0..m {
        let ii = i as isize;
        let own = p[i] as f64;
        let degree = size(ii - 1) + own - 1.0 + size(ii + 1);
        entries[i][i] = al * degree + w * (own - 1.0);
        if i > 0 {
            entries[i][i - 1] = w * size(ii - 1);
        }
        if i + 1 < m {
            entries[i][i + 1] = w * size(ii + 1);
        }
    }
    QuotientMatrix {
        cell_sizes: p.to_vec(),
        entries,
    }
}

/// `lambda_alpha` of the realized join, via Sturm bisection on the
/// symmetrized quotient.
pub fn quotient_spectral_radius(spec: &JoinSpec, a: Alpha) -> f64 {
    let (diag, off) = quotient_matrix(spec, a).symmetrized();
    tridiag::largest_eigenvalue(&diag, &off)
}

/// One Perron entry per cell, scaled so the expanded full-graph vector has
/// unit Euclidean norm. Also returns the eigenvalue.
pub fn quotient_perron(spec: &JoinSpec, a: Alpha) -> (f64, Vec<f64>) {
    let (diag, off) = quotient_matrix(spec, a).symmetrized();
    let lambda = tridiag::largest_eigenvalue(&diag, &off);
    let y = tridiag::eigenvector(&diag, &off, lambda);
    // y is unit in the symmetrized basis; y_i / sqrt(n_i) repeated n_i times
    // has the same norm.
    let cells = spec
        .parts()
        .iter()
        .zip(&y)
        .map(|(&n, &v)| v / (n as f64).sqrt())
        .collect();
    (lambda, cells)
}

/// Monic cubic `x^3 + c2 x^2 + c1 x + c0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicCoefficients {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl CubicCoefficients {
    pub fn eval(&self, x: f64) -> f64 {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    fn bisect(&self, mut lo: f64, mut hi: f64) -> f64 {
        // f(lo) <= 0 <= f(hi) and f is increasing on [lo, hi]
        for _ in 0..400 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.eval(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Critical points of `f`, smaller first, when real.
    fn critical_points(&self) -> Option<(f64, f64)> {
        let disc = self.c2 * self.c2 - 3.0 * self.c1;
        if disc < 0.0 {
            return None;
        }
        let r = disc.sqrt();
        Some(((-self.c2 - r) / 3.0, (-self.c2 + r) / 3.0))
    }

    fn cauchy_bound(&self) -> f64 {
        1.0 + self.c2.abs().max(self.c1.abs()).max(self.c0.abs())
    }

    /// Largest real root. Bisection on an interval where `f` is monotone:
    /// right of the larger critical point when `f` is non-positive there,
    /// otherwise left of the smaller one.
    pub fn largest_root(&self) -> f64 {
        let bound = self.cauchy_bound();
        match self.critical_points() {
            None => self.bisect(-bound, bound),
            Some((left, right)) => {
                if self.eval(right) <= 0.0 {
                    self.bisect(right, bound.max(right))
                } else {
                    self.bisect(-bound.max(-left), left)
                }
            }
        }
    }

    /// All real roots, ascending, when `f` has three real roots.
    pub fn real_roots(&self) -> Option<[f64; 3]> {
        let (left, right) = self.critical_points()?;
        if self.eval(left) < 0.0 || self.eval(right) > 0.0 {
            return None;
        }
        let bound = self.cauchy_bound();
        let neg = CubicCoefficients {
            c3: 1.0,
            c2: -self.c2,
            c1: self.c1,
            c0: -self.c0,
        };
        let smallest = -neg.bisect(-left, bound.max(-left));
        // f decreases on [left, right]
        let mid = {
            let (mut lo, mut hi) = (left, right);
            for _ in 0..400 {
                let m = 0.5 * (lo + hi);
                if m <= lo || m >= hi {
                    break;
                }
                if self.eval(m) > 0.0 {
                    lo = m;
                } else {
                    hi = m;
                }
            }
            0.5 * (lo + hi)
        };
        Some([smallest, mid, self.largest_root()])
    }
}

/// Characteristic polynomial `det(xI - B)` of the quotient of
/// `K_{n1} v K_{n2} v K_{n3}`.
pub fn cubic_join(n1: usize, n2: usize, n3: usize, a: Alpha) -> Result<CubicCoefficients> {
    let spec = JoinSpec::new(vec![n1, n2, n3])?;
    let b = quotient_matrix(&spec, a).entries;
    let (p, q) = (b[0][0], b[0][1]);
    let (r, s, t) = (b[1][0], b[1][1], b[1][2]);
    let (u, v) = (b[2][1], b[2][2]);
    Ok(CubicCoefficients {
        c3: 1.0,
        c2: -(p + s + v),
        c1: p * s + p * v + s * v - t * u - q * r,
        c0: -p * s * v + p * t * u + q * r * v,
    })
}

/// Closed form for `K_{n1} v K_{n2} v K_{n1}`.
pub fn symmetric_join_lambda(n1: usize, n2: usize, a: Alpha) -> f64 {
    let (x, y, al) = (n1 as f64, n2 as f64, a.value());
    let g = ((2.0 * x + y).powi(2) * al * al - 2.0 * (2.0 * x * x + 5.0 * x * y + y * y) * al
        + x * x
        + 6.0 * x * y
        + y * y)
        .sqrt();
    0.5 * ((x + y - 2.0) + al * (2.0 * x + y) + g)
}

/// Closed form for `K_k v K_k v K_k`.
pub fn triple_equal_lambda(k: usize, a: Alpha) -> f64 {
    let al = a.value();
    (3.0 * al + 2.0 + (9.0 * al * al - 16.0 * al + 8.0).sqrt()) / 2.0 * k as f64 - 1.0
}

/// Largest eigenvalue of the folded 2x2 system of
/// `K_{n1} v K_{n2} v K_{n2} v K_{n1}`: half of its trace
/// `alpha(n1+n2) + n1 + 2n2 - 2` plus the square-root term.
pub fn quad_join_lambda(n1: usize, n2: usize, a: Alpha) -> f64 {
    let (x, y, al) = (n1 as f64, n2 as f64, a.value());
    0.5 * ((al * (x + y) + x + 2.0 * y - 2.0) + quad_join_root_term(x, y, al))
}

fn quad_join_root_term(x: f64, y: f64, al: f64) -> f64 {
    ((al - 1.0).powi(2) * x * x + 2.0 * al * (al - 1.0) * x * y + (al - 2.0).powi(2) * y * y).sqrt()
}

/// The general expression as typeset for the four-cell symmetric join,
/// including its extra `alpha(2n1 + n2)` term. Kept for comparison only:
/// it does not equal the eigenvalue except where that term vanishes.
pub fn quad_join_lambda_printed(n1: usize, n2: usize, a: Alpha) -> f64 {
    let (x, y, al) = (n1 as f64, n2 as f64, a.value());
    0.5 * ((al * (x + y) + x + 2.0 * y - 2.0) + al * (2.0 * x + y) + quad_join_root_term(x, y, al))
}

/// `(2 alpha + 3 + sqrt(4 alpha^2 - 8 alpha + 5)) / 2 * k - 1`.
pub fn quad_equal_lambda(k: usize, a: Alpha) -> f64 {
    let al = a.value();
    (2.0 * al + 3.0 + (4.0 * al * al - 8.0 * al + 5.0).sqrt()) / 2.0 * k as f64 - 1.0
}

/// Strict lower and upper bounds on `lambda_alpha` of the extremal join with
/// middle cell `n_mid` and connectivity `k`.
pub fn theorem_bounds(n_mid: usize, k: usize, a: Alpha) -> Result<(f64, f64)> {
    if k < 2 {
        return Err(Error::OutOfScope(format!("k = {k} < 2")));
    }
    if n_mid < 2 * k {
        return Err(Error::OutOfScope(format!("middle cell {n_mid} < 2k = {}", 2 * k)));
    }
    let m = (n_mid + 2 * k) as f64;
    let al = a.value();
    let lower = 0.5 * (al * m + (al * al * (m + 1.0).powi(2) + 4.0 * m * (1.0 - 2.0 * al)).sqrt());
    Ok((lower, m - 1.0))
}
