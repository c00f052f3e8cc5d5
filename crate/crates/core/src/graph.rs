//! Simple undirected graphs stored as per-vertex neighbourhood bitmasks.
//!
//! Every vertex set in this module is a `u64` mask, so a graph has at most
//! [`MAX_ORDER`] vertices. Values are immutable once built; the
//! transformation helpers return new graphs.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Upper limit on the number of removal sets tried by [`Graph::is_k_connected`].
const MAX_REMOVAL_SETS: u128 = 5_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the set bits of a mask, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Result of a diameter query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidEdge(u, v));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Build from raw neighbourhood masks. The caller guarantees symmetry
    /// and an empty diagonal.
    pub(crate) fn from_masks_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(i, m)| m & (1 << i) == 0));
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Copy of this graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u == v || u >= self.n || v >= self.n || self.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    /// Copy of this graph with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.remove(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Vertices reachable from `start` using only vertices in `allowed`.
    pub(crate) fn reach(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & allowed & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Vertex masks of the connected components, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.reach(left.trailing_zeros() as usize, left);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Induced subgraph on `mask`, with the kept vertices renumbered in
    /// increasing order. Returns the subgraph and the original labels.
    pub fn induced(&self, mask: u64) -> Result<(Graph, Vec<usize>)> {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut g = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        Ok((g, keep))
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            for v in bits(frontier) {
                dist[v] = Some(level);
            }
        }
        dist
    }

    /// Eccentricity of `source`, or `None` when some vertex is unreachable.
    pub(crate) fn eccentricity(&self, source: usize) -> Option<usize> {
        let all = self.vertex_mask();
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut level = 0;
        while seen != all {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            if frontier == 0 {
                return None;
            }
            seen |= frontier;
            level += 1;
        }
        Some(level)
    }

    /// Largest BFS distance over all vertex pairs. `K_1` has diameter 0.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in 0..self.n {
            match self.eccentricity(v) {
                Some(e) => best = best.max(e),
                None => return Diameter::Infinite,
            }
        }
        Diameter::Finite(best)
    }

    /// Whether removing any set of fewer than `k` vertices leaves a
    /// connected graph. Checked by exhaustive removal.
    pub fn is_k_connected(&self, k: usize) -> Result<bool> {
        if k == 0 || k >= self.n {
            return Err(Error::InvalidParameter(format!(
                "k = {k} must satisfy 1 <= k <= n - 1 = {}",
                self.n.saturating_sub(1)
            )));
        }
        let sets: u128 = (0..k).map(|s| binomial(self.n, s)).sum();
        if sets > MAX_REMOVAL_SETS {
            return Err(Error::UnsupportedSize { n: self.n, limit: 12 });
        }
        let all = self.vertex_mask();
        for size in 0..k {
            for removed in Subsets::new(self.n, size) {
                let left = all & !removed;
                let start = left.trailing_zeros() as usize;
                if self.reach(start, left) != left {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Same check as [`Graph::is_k_connected`] without argument validation,
    /// for callers that have already checked `1 <= k < n`.
    pub(crate) fn is_k_connected_unchecked(&self, k: usize) -> bool {
        let all = self.vertex_mask();
        (0..k).all(|size| {
            Subsets::new(self.n, size).all(|removed| {
                let left = all & !removed;
                self.reach(left.trailing_zeros() as usize, left) == left
            })
        })
    }

    /// Apply a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length differs from order".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Parse the `n m` header plus `m` lines of `u v` (0-based).
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::EdgeList {
            line: 1,
            reason: "missing header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            if u == v || u >= n || v >= n {
                return Err(Error::EdgeList {
                    line,
                    reason: format!("edge ({u}, {v}) out of range or a loop"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: 1,
                reason: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList {
            line,
            reason: format!("expected two non-negative integers, got {text:?}"),
        }),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}

/// All `size`-element subsets of `{0..n}` as masks, in Gosper order.
pub(crate) struct Subsets {
    next: Option<u128>,
    limit: u128,
}

impl Subsets {
    pub(crate) fn new(n: usize, size: usize) -> Self {
        let limit = 1u128 << n;
        let next = if size > n { None } else { Some((1u128 << size) - 1) };
        Subsets { next, limit }
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let x = self.next?;
        if x >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            Some((((r ^ x) >> 2) / c) | r)
        };
        Some(x as u64)
    }
}

// ---------------------------------------------------------------------------
// Constructors

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let all = g.vertex_mask();
    for v in 0..n {
        g.adj[v] = all & !(1 << v);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.insert(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder(n));
    }
    let mut g = path(n)?;
    g.insert(0, n - 1);
    Ok(g)
}

/// The star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    let mut g = Graph::empty(leaves + 1)?;
    for v in 1..=leaves {
        g.insert(0, v);
    }
    Ok(g)
}

/// Cell sizes of a sequential join of cliques `K_{n0} v K_{n1} v ... v K_{nd}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct JoinSpec(Vec<usize>);

impl JoinSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSpec("no cells".into()));
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidSpec(format!("cell {i} is empty")));
        }
        Ok(JoinSpec(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of cells minus one.
    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    /// Vertex range of each cell in the realized graph.
    pub fn cell_ranges(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    pub fn cell_masks(&self) -> Vec<u64> {
        self.cell_ranges()
            .into_iter()
            .map(|r| full_mask(r.end) & !full_mask(r.start))
            .collect()
    }

    pub fn reversed(&self) -> JoinSpec {
        JoinSpec(self.0.iter().rev().copied().collect())
    }

    /// The lexicographically smaller of the spec and its reversal.
    pub fn canonical(&self) -> JoinSpec {
        let r = self.reversed();
        if r.0 < self.0 {
            r
        } else {
            self.clone()
        }
    }

    /// Expected edge count of the realized join.
    pub fn edge_count(&self) -> usize {
        let inside: usize = self.0.iter().map(|p| p * (p - 1) / 2).sum();
        let across: usize = self.0.windows(2).map(|w| w[0] * w[1]).sum();
        inside + across
    }
}

impl TryFrom<Vec<usize>> for JoinSpec {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        JoinSpec::new(v)
    }
}

impl From<JoinSpec> for Vec<usize> {
    fn from(s: JoinSpec) -> Self {
        s.0
    }
}

impl fmt::Display for JoinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for JoinSpec {
    type Err = Error;

    /// Accepts `1,2,4,2,1` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("bad cell size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        JoinSpec::new(parts)
    }
}

/// Realize `K_{n0} v ... v K_{nd}`: cells are consecutive vertex blocks,
/// each a clique, with every edge between consecutive cells.
pub fn sequential_join(spec: &JoinSpec) -> Result<Graph> {
    let mut g = Graph::empty(spec.order())?;
    let masks = spec.cell_masks();
    for (i, r) in spec.cell_ranges().into_iter().enumerate() {
        let mut around = masks[i];
        if i > 0 {
            around |= masks[i - 1];
        }
        if i + 1 < masks.len() {
            around |= masks[i + 1];
        }
        for v in r {
            g.adj[v] = around & !(1 << v);
        }
    }
    Ok(g)
}
