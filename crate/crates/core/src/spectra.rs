//! The `A_alpha = alpha*D + (1 - alpha)*A` operator: spectral radius, Perron
//! vector, Rayleigh quotient and the classical degree bounds.
//!
//! The operator is applied matrix-free from the adjacency bitmasks. Dense
//! matrices are only built on request by [`a_alpha_matrix`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Residual target relative to `max(1, lambda)`.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 200_000;
/// Diagonal shift applied during power iteration. Makes the iteration
/// matrix primitive even for bipartite graphs at alpha = 0.
const SHIFT: f64 = 1.0;

/// Mixing parameter in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::InvalidAlpha(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Weight on the adjacency part, `1 - alpha`.
    #[inline]
    pub fn adjacency_weight(self) -> f64 {
        1.0 - self.0
    }

    /// `{0, 1/steps, ..., (steps-1)/steps}`.
    pub fn grid(steps: usize) -> Vec<Alpha> {
        (0..steps).map(|i| Alpha(i as f64 / steps as f64)).collect()
    }

    pub const ZERO: Alpha = Alpha(0.0);
    pub const HALF: Alpha = Alpha(0.5);
}

impl TryFrom<f64> for Alpha {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Alpha::new(v)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::str::FromStr for Alpha {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("alpha {s:?} is not a number")))?;
        Alpha::new(v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda: f64,
    pub perron: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

/// Convergence settings for [`spectral_radius_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

/// Dense `A_alpha(G)` as row vectors.
pub fn a_alpha_matrix(g: &Graph, a: Alpha) -> Vec<Vec<f64>> {
    let n = g.order();
    let off = a.adjacency_weight();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        a.value() * g.degree(i) as f64
                    } else if g.has_edge(i, j) {
                        off
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// `out = A_alpha x`.
#[inline]
pub(crate) fn apply(g: &Graph, a: Alpha, x: &[f64], out: &mut [f64]) {
    let off = a.adjacency_weight();
    for (v, o) in out.iter_mut().enumerate() {
        let nb = g.neighbors(v);
        let s: f64 = bits(nb).map(|w| x[w]).sum();
        *o = a.value() * nb.count_ones() as f64 * x[v] + off * s;
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

pub fn spectral_radius(g: &Graph, a: Alpha) -> Result<SpectralResult> {
    spectral_radius_with(g, a, PowerOptions::default())
}

/// Power iteration on `A_alpha + I`, stopped once
/// `||A_alpha x - lambda x|| <= tolerance * max(1, lambda)`.
pub fn spectral_radius_with(g: &Graph, a: Alpha, opts: PowerOptions) -> Result<SpectralResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    // Degree-weighted start is closer to the Perron vector than all-ones.
    let mut x: Vec<f64> = (0..n).map(|v| 1.0 + g.degree(v) as f64).collect();
    let s = norm(&x);
    x.iter_mut().for_each(|v| *v /= s);
    let mut ax = vec![0.0; n];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    for it in 0..=opts.max_iterations {
        apply(g, a, &x, &mut ax);
        lambda = x.iter().zip(&ax).map(|(p, q)| p * q).sum();
        residual = x
            .iter()
            .zip(&ax)
            .map(|(p, q)| (q - lambda * p).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= opts.tolerance * lambda.max(1.0) {
            return Ok(SpectralResult {
                lambda,
                perron: x,
                residual,
                iterations: it,
            });
        }
        if it == opts.max_iterations {
            break;
        }
        for (p, q) in x.iter_mut().zip(&ax) {
            *p = q + SHIFT * *p;
        }
        let s = norm(&x);
        x.iter_mut().for_each(|v| *v /= s);
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iterations,
        residual,
        lambda,
        vector: x,
    })
}

/// Largest eigenvalue of `A_alpha(G)` for any graph: the maximum over its
/// connected components (isolated vertices contribute 0).
pub fn largest_eigenvalue(g: &Graph, a: Alpha) -> Result<f64> {
    if g.is_connected() {
        return Ok(spectral_radius(g, a)?.lambda);
    }
    let mut best: f64 = 0.0;
    for comp in g.components() {
        if comp.count_ones() > 1 {
            let (h, _) = g.induced(comp)?;
            best = best.max(spectral_radius(&h, a)?.lambda);
        }
    }
    Ok(best)
}

/// `x^T A_alpha x / x^T x`, evaluated edge by edge as
/// `alpha * sum d(u) x_u^2 + 2 (1 - alpha) * sum_{uv in E} x_u x_v`.
pub fn rayleigh_quotient(g: &Graph, a: Alpha, x: &[f64]) -> Result<f64> {
    if x.len() != g.order() {
        return Err(Error::InvalidVector(format!(
            "length {} does not match order {}",
            x.len(),
            g.order()
        )));
    }
    let xx: f64 = x.iter().map(|v| v * v).sum();
    if xx == 0.0 || !xx.is_finite() {
        return Err(Error::InvalidVector("zero or non-finite vector".into()));
    }
    let diag: f64 = (0..g.order()).map(|v| g.degree(v) as f64 * x[v] * x[v]).sum();
    let cross: f64 = g.edges().map(|(u, v)| x[u] * x[v]).sum();
    Ok((a.value() * diag + 2.0 * a.adjacency_weight() * cross) / xx)
}

/// `(2|E|/|V|, max over edges uv of alpha d(u) + (1 - alpha) d(v))`, the
/// maximum taken over both orientations of each edge.
pub fn degree_bounds(g: &Graph, a: Alpha) -> Result<(f64, f64)> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let lower = 2.0 * g.edge_count() as f64 / g.order() as f64;
    let upper = g
        .edges()
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .map(|(u, v)| a.value() * g.degree(u) as f64 + a.adjacency_weight() * g.degree(v) as f64)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok((lower, upper))
}

/// Lower bound on `lambda_alpha` in terms of the maximum degree; attained
/// exactly by the star `K_{1,delta}`.
pub fn delta_lower_bound(delta: usize, a: Alpha) -> f64 {
    let al = a.value();
    let d = delta as f64;
    let bound = 0.5 * (al * (d + 1.0) + (al * al * (d + 1.0).powi(2) + 4.0 * d * (1.0 - 2.0 * al)).sqrt());
    if al <= 0.5 {
        debug_assert!(bound >= al * (d + 1.0) - 1e-12);
    } else {
        debug_assert!(bound >= al * d + (1.0 - al).powi(2) / al - 1e-12);
    }
    bound
}
