//! Independent dense eigensolver used to cross-check the matrix-free paths.

use nalgebra::DMatrix;

use crate::graph::Graph;
use crate::spectra::{a_alpha_matrix, Alpha};

fn largest_symmetric(m: DMatrix<f64>) -> f64 {
    m.symmetric_eigenvalues()
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max)
}

fn dense(rows: Vec<Vec<f64>>) -> DMatrix<f64> {
    let n = rows.len();
    DMatrix::from_fn(n, n, |i, j| rows[i][j])
}

/// Largest eigenvalue of the dense `A_alpha(G)`.
pub fn dense_a_alpha_radius(g: &Graph, a: Alpha) -> f64 {
    largest_symmetric(dense(a_alpha_matrix(g, a)))
}

/// Largest adjacency eigenvalue.
pub fn adjacency_radius(g: &Graph) -> f64 {
    let n = g.order();
    largest_symmetric(DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 }))
}

/// Largest eigenvalue of the signless Laplacian `Q = D + A`.
pub fn signless_laplacian_radius(g: &Graph) -> f64 {
    let n = g.order();
    largest_symmetric(DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, star};

    #[test]
    fn known_values() {
        assert!((adjacency_radius(&path(3).unwrap()) - 2f64.sqrt()).abs() < 1e-12);
        assert!((signless_laplacian_radius(&complete(4).unwrap()) - 6.0).abs() < 1e-12);
        // Q(K_{1,3}) has spectral radius 4
        assert!((signless_laplacian_radius(&star(3).unwrap()) - 4.0).abs() < 1e-12);
        assert!((dense_a_alpha_radius(&complete(5).unwrap(), Alpha::new(0.3).unwrap()) - 4.0).abs() < 1e-12);
    }
}
