use std::collections::VecDeque;

use aalpha_core::graph::bits;
use aalpha_core::spectra::largest_eigenvalue;
use aalpha_core::{
    apply_shift, degree_bounds, emit_graph6, parse_graph6, quotient_spectral_radius, sequential_join, spectral_radius,
    Alpha, Diameter, Graph, JoinSpec, ShiftMove,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected with an edge", |g| g.order() >= 2 && g.is_connected())
}

fn alpha() -> impl Strategy<Value = Alpha> {
    (0u32..100).prop_map(|i| Alpha::new(i as f64 / 100.0).unwrap())
}

/// Vertex-disjoint s-t paths by unit-capacity max flow on the split graph.
fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    // vertex v -> in 2v, out 2v+1
    let size = 2 * n;
    let mut cap = vec![vec![0i32; size]; size];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
        for w in bits(g.neighbors(v)) {
            cap[2 * v + 1][2 * w] = n as i32;
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[dst] == usize::MAX {
            return flow;
        }
        let mut y = dst;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
            }
        }
    }
    best
}

fn join_spec(max_cells: usize, max_part: usize) -> impl Strategy<Value = JoinSpec> {
    proptest::collection::vec(1..=max_part, 1..=max_cells).prop_map(|p| JoinSpec::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn k_connectivity_matches_menger(g in graph(8), k in 1usize..7) {
        prop_assume!(k < g.order());
        prop_assert_eq!(g.is_k_connected(k).unwrap(), vertex_connectivity(&g) >= k);
    }

    #[test]
    fn shift_preserves_edge_count(g in graph(10), u in 0usize..10, v in 0usize..10, pick in any::<u64>()) {
        let n = g.order();
        prop_assume!(u < n && v < n && u != v);
        let pool = g.neighbors(u) & !g.neighbors(v) & !(1 << v);
        let moved: Vec<usize> = bits(pool & pick).collect();
        prop_assume!(!moved.is_empty());
        let after = apply_shift(&g, &ShiftMove::single(u, v, moved.clone())).unwrap();
        prop_assert_eq!(after.edge_count(), g.edge_count());
        for w in moved {
            prop_assert!(!after.has_edge(u, w) && after.has_edge(v, w));
        }
    }

    #[test]
    fn radius_between_degree_bounds(g in connected(10), a in alpha()) {
        let lam = spectral_radius(&g, a).unwrap().lambda;
        let (lo, hi) = degree_bounds(&g, a).unwrap();
        let tol = 1e-9 * lam.max(1.0);
        prop_assert!(lo <= lam + tol && lam <= hi + tol, "{lo} {lam} {hi}");
    }

    #[test]
    fn deleting_an_edge_lowers_the_radius(g in connected(10), a in alpha(), pick in any::<usize>()) {
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = edges[pick % edges.len()];
        let lam = spectral_radius(&g, a).unwrap().lambda;
        let sub = largest_eigenvalue(&g.without_edge(u, v).unwrap(), a).unwrap();
        prop_assert!(sub < lam - 1e-9, "{sub} vs {lam}");
    }

    #[test]
    fn join_connectivity_and_diameter(inner in proptest::collection::vec(1usize..=4, 1..=5)) {
        let mut parts = vec![1];
        parts.extend(&inner);
        parts.push(1);
        let spec = JoinSpec::new(parts).unwrap();
        let g = sequential_join(&spec).unwrap();
        prop_assert_eq!(g.diameter(), Diameter::Finite(spec.d()));
        let k = *inner.iter().min().unwrap();
        prop_assert_eq!(vertex_connectivity(&g), k);
    }

    #[test]
    fn quotient_matches_full_graph(spec in join_spec(7, 4), a in alpha()) {
        let q = quotient_spectral_radius(&spec, a);
        let full = spectral_radius(&sequential_join(&spec).unwrap(), a).map(|r| r.lambda).unwrap_or(0.0);
        prop_assert!((q - full).abs() <= 1e-8, "{spec}: {q} vs {full}");
    }
}
