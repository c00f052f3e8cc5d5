//! Searches for the graph of largest `lambda_alpha` among k-connected graphs
//! of order `n` and diameter `d`, compared against the bulge family
//! `K_1 v K_k v ... v K_{n_mid} v ... v K_k v K_1` with the big cell at
//! index `floor(d/2)`.
//!
//! Two routes:
//! * critical-class: every sequential clique join with unit end cells and
//!   interior cells of size at least `k`, scored through the quotient;
//! * exhaustive: every labeled graph on `n <= 7` vertices, filtered by
//!   connectivity, diameter and k-connectivity, scored by power iteration.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{Check, STRICT_MARGIN};
use crate::error::{Error, Result};
use crate::graph::{sequential_join, Graph, JoinSpec};
use crate::graph6::emit_graph6;
use crate::iso::are_isomorphic;
use crate::quotient::{quotient_spectral_radius, theorem_bounds};
use crate::spectra::{degree_bounds, delta_lower_bound, spectral_radius, Alpha};

/// Values within this distance of the maximum count as co-maximal.
pub const TIE_TOLERANCE: f64 = 1e-9;
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;
/// Number of leading edge bits used to split the labeled enumeration.
const SHARD_BITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    CriticalClass,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "critical" | "critical-class" => Ok(Mode::CriticalClass),
            other => Err(Error::InvalidParameter(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::CriticalClass => "critical-class",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub alpha: Alpha,
    pub mode: Mode,
}

impl SearchParams {
    pub fn new(n: usize, k: usize, d: usize, alpha: Alpha, mode: Mode) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k = {k} < 2")));
        }
        if d < 2 {
            return Err(Error::InvalidParameter(format!("d = {d} < 2")));
        }
        let needed = (d - 1) * k + 2;
        if n < needed {
            return Err(Error::Infeasible { n, needed });
        }
        if mode == Mode::Exhaustive && n > MAX_EXHAUSTIVE_ORDER {
            return Err(Error::UnsupportedSize {
                n,
                limit: MAX_EXHAUSTIVE_ORDER,
            });
        }
        Ok(SearchParams { n, k, d, alpha, mode })
    }

    /// Size of the big cell in the predicted extremal graph.
    pub fn n_mid(&self) -> usize {
        self.n - 2 - (self.d - 2) * self.k
    }

    pub fn in_theorem_scope(&self) -> bool {
        self.n_mid() >= 2 * self.k
    }
}

/// The predicted maximizer: unit end cells, interior cells of size `k`,
/// and the remaining vertices in cell `floor(d/2)`.
pub fn predicted_extremal(n: usize, k: usize, d: usize) -> Result<JoinSpec> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be positive".into()));
    }
    let needed = (d - 1) * k + 2;
    if n < needed {
        return Err(Error::Infeasible { n, needed });
    }
    let mut parts = vec![k; d + 1];
    parts[0] = 1;
    parts[d] = 1;
    if d >= 2 {
        parts[d / 2] = n - 2 - (d - 2) * k;
    }
    JoinSpec::new(parts)
}

/// Compositions of `n - 2` into `d - 1` parts, each at least `k`, as join
/// specs with unit end cells. Lexicographic order.
pub struct CriticalClass {
    interior: Vec<usize>,
    total: usize,
    k: usize,
    done: bool,
}

pub fn enumerate_critical_class(n: usize, k: usize, d: usize) -> CriticalClass {
    let m = d.saturating_sub(1);
    let feasible = d >= 2 && n >= m * k + 2;
    let total = n.saturating_sub(2);
    let mut interior = vec![k; m];
    if feasible {
        interior[m - 1] = total - (m - 1) * k;
    }
    CriticalClass {
        interior,
        total,
        k,
        done: !feasible,
    }
}

impl Iterator for CriticalClass {
    type Item = JoinSpec;

    fn next(&mut self) -> Option<JoinSpec> {
        if self.done {
            return None;
        }
        let mut parts = Vec::with_capacity(self.interior.len() + 2);
        parts.push(1);
        parts.extend_from_slice(&self.interior);
        parts.push(1);
        let out = JoinSpec::new(parts).expect("positive parts");

        // advance: bump the rightmost non-final part whose tail has slack
        let m = self.interior.len();
        let mut advanced = false;
        for i in (0..m.saturating_sub(1)).rev() {
            let tail: usize = self.interior[i + 1..].iter().sum();
            if tail > (m - 1 - i) * self.k {
                self.interior[i] += 1;
                for p in &mut self.interior[i + 1..m - 1] {
                    *p = self.k;
                }
                let head: usize = self.interior[..m - 1].iter().sum();
                self.interior[m - 1] = self.total - head;
                advanced = true;
                break;
            }
        }
        self.done = !advanced;
        Some(out)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub visited: u64,
    pub connected: u64,
    pub right_diameter: u64,
    pub k_connected: u64,
    pub pruned_by_bound: u64,
    pub spectral_evaluations: u64,
}

impl SearchStats {
    fn merge(self, o: SearchStats) -> SearchStats {
        SearchStats {
            visited: self.visited + o.visited,
            connected: self.connected + o.connected,
            right_diameter: self.right_diameter + o.right_diameter,
            k_connected: self.k_connected + o.k_connected,
            pruned_by_bound: self.pruned_by_bound + o.pruned_by_bound,
            spectral_evaluations: self.spectral_evaluations + o.spectral_evaluations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub params: SearchParams,
    /// `None` when no graph belongs to the class.
    pub best_lambda: Option<f64>,
    /// Co-maximal graphs, one per isomorphism class, as graph6.
    pub best_graphs: Vec<String>,
    /// Co-maximal compositions in canonical orientation (critical-class only).
    pub best_specs: Vec<JoinSpec>,
    pub predicted_spec: JoinSpec,
    pub predicted_lambda: f64,
    pub n_mid: usize,
    pub in_theorem_scope: bool,
    pub matches_prediction: bool,
    pub graphs_examined: u64,
    /// `best_lambda` minus the best value outside the co-maximal set.
    pub runner_up_gap: Option<f64>,
    pub stats: SearchStats,
    /// Per-composition values, critical-class mode only.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub table: Vec<(JoinSpec, f64)>,
}

/// Running maximum with a co-maximal set and runner-up value.
#[derive(Debug, Clone)]
struct Leaders<T> {
    best: f64,
    members: Vec<T>,
    runner_up: f64,
}

impl<T> Leaders<T> {
    fn new() -> Self {
        Leaders {
            best: f64::NEG_INFINITY,
            members: Vec::new(),
            runner_up: f64::NEG_INFINITY,
        }
    }

    /// Insert `item` with value `v`. `same` reports whether `item` is
    /// already represented among the members.
    fn offer(&mut self, v: f64, item: T, same: impl Fn(&T, &T) -> bool) {
        if v > self.best + TIE_TOLERANCE {
            self.runner_up = self.runner_up.max(self.best);
            self.best = v;
            self.members.clear();
            self.members.push(item);
        } else if v >= self.best - TIE_TOLERANCE {
            self.best = self.best.max(v);
            if !self.members.iter().any(|m| same(m, &item)) {
                self.members.push(item);
            }
        } else {
            self.runner_up = self.runner_up.max(v);
        }
    }

    fn merge(mut self, other: Leaders<T>, same: impl Fn(&T, &T) -> bool + Copy) -> Self {
        let runner = self.runner_up.max(other.runner_up);
        let best = other.best;
        for m in other.members {
            self.offer(best, m, same);
        }
        self.runner_up = self.runner_up.max(runner);
        if other.best < self.best - TIE_TOLERANCE {
            self.runner_up = self.runner_up.max(other.best);
        }
        self
    }

    /// Lower bound below which an item cannot affect the leaders.
    fn floor(&self) -> f64 {
        self.runner_up
    }
}

pub fn search(p: &SearchParams) -> Result<SearchReport> {
    match p.mode {
        Mode::CriticalClass => search_critical_class(p),
        Mode::Exhaustive => search_exhaustive(p),
    }
}

pub fn search_critical_class(p: &SearchParams) -> Result<SearchReport> {
    let predicted = predicted_extremal(p.n, p.k, p.d)?;
    let specs: Vec<JoinSpec> = enumerate_critical_class(p.n, p.k, p.d).collect();
    let table: Vec<(JoinSpec, f64)> = specs
        .into_par_iter()
        .map(|s| {
            let lam = quotient_spectral_radius(&s, p.alpha);
            (s, lam)
        })
        .collect();

    let mut leaders = Leaders::new();
    for (s, lam) in &table {
        leaders.offer(*lam, s.canonical(), |a, b| a == b);
    }
    let mut best_specs = leaders.members.clone();
    best_specs.sort();
    let matches = best_specs.len() == 1 && best_specs[0] == predicted.canonical();
    let best_graphs = best_specs
        .iter()
        .filter(|s| s.order() <= crate::graph6::MAX_GRAPH6_ORDER)
        .map(|s| emit_graph6(&sequential_join(s)?))
        .collect::<Result<Vec<_>>>()?;
    let examined = table.len() as u64;
    Ok(SearchReport {
        params: *p,
        best_lambda: (!table.is_empty()).then_some(leaders.best),
        best_graphs,
        best_specs,
        predicted_lambda: quotient_spectral_radius(&predicted, p.alpha),
        predicted_spec: predicted,
        n_mid: p.n_mid(),
        in_theorem_scope: p.in_theorem_scope(),
        matches_prediction: matches,
        graphs_examined: examined,
        runner_up_gap: leaders
            .runner_up
            .is_finite()
            .then_some(leaders.best - leaders.runner_up),
        // every composition is connected, k-connected and of diameter d by construction
        stats: SearchStats {
            visited: examined,
            connected: examined,
            right_diameter: examined,
            k_connected: examined,
            pruned_by_bound: 0,
            spectral_evaluations: examined,
        },
        table,
    })
}

/// Edge slots of the labeled enumeration, in graph6 bit order.
fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

fn same_class(a: &Graph, b: &Graph) -> bool {
    are_isomorphic(a, b).unwrap_or(false)
}

struct Shard {
    leaders: Leaders<Graph>,
    stats: SearchStats,
}

fn scan_shard(p: &SearchParams, slots: &[(usize, usize)], high: u64, low_bits: usize) -> Result<Shard> {
    let n = p.n;
    let mut leaders: Leaders<Graph> = Leaders::new();
    let mut stats = SearchStats::default();
    let mut adj = vec![0u64; n];
    for low in 0..1u64 << low_bits {
        stats.visited += 1;
        let code = high << low_bits | low;
        adj.iter_mut().for_each(|m| *m = 0);
        let mut rest = code;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = slots[b];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph::from_masks_unchecked(adj.clone());
        if !g.is_connected() {
            continue;
        }
        stats.connected += 1;
        let mut diameter = 0;
        for v in 0..n {
            diameter = diameter.max(g.eccentricity(v).expect("connected"));
            if diameter > p.d {
                break;
            }
        }
        if diameter != p.d {
            continue;
        }
        stats.right_diameter += 1;
        if !g.is_k_connected_unchecked(p.k) {
            continue;
        }
        stats.k_connected += 1;
        let (_, upper) = degree_bounds(&g, p.alpha)?;
        if upper < leaders.floor() {
            stats.pruned_by_bound += 1;
            continue;
        }
        stats.spectral_evaluations += 1;
        let lam = spectral_radius(&g, p.alpha)?.lambda;
        leaders.offer(lam, g, same_class);
    }
    Ok(Shard { leaders, stats })
}

pub fn search_exhaustive(p: &SearchParams) -> Result<SearchReport> {
    if p.n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::UnsupportedSize {
            n: p.n,
            limit: MAX_EXHAUSTIVE_ORDER,
        });
    }
    let predicted = predicted_extremal(p.n, p.k, p.d)?;
    let predicted_graph = sequential_join(&predicted)?;
    let slots = edge_slots(p.n);
    let m = slots.len();
    let high_bits = m.min(SHARD_BITS);
    let low_bits = m - high_bits;

    let merged = (0..1u64 << high_bits)
        .into_par_iter()
        .map(|high| scan_shard(p, &slots, high, low_bits))
        .try_reduce(
            || Shard {
                leaders: Leaders::new(),
                stats: SearchStats::default(),
            },
            |a, b| {
                Ok(Shard {
                    leaders: a.leaders.merge(b.leaders, same_class),
                    stats: a.stats.merge(b.stats),
                })
            },
        )?;

    let leaders = merged.leaders;
    let found = !leaders.members.is_empty();
    let matches = leaders.members.len() == 1 && same_class(&leaders.members[0], &predicted_graph);
    let best_graphs = leaders.members.iter().map(emit_graph6).collect::<Result<Vec<_>>>()?;
    Ok(SearchReport {
        params: *p,
        best_lambda: found.then_some(leaders.best),
        best_graphs,
        best_specs: Vec::new(),
        predicted_lambda: quotient_spectral_radius(&predicted, p.alpha),
        predicted_spec: predicted,
        n_mid: p.n_mid(),
        in_theorem_scope: p.in_theorem_scope(),
        matches_prediction: matches,
        graphs_examined: merged.stats.visited,
        runner_up_gap: (found && leaders.runner_up.is_finite()).then_some(leaders.best - leaders.runner_up),
        stats: merged.stats,
        table: Vec::new(),
    })
}

/// Strict sandwich `lower < lambda < upper` for the predicted extremal
/// graph, plus the identity `upper = max degree`.
pub fn verify_theorem_bounds_on_argmax(p: &SearchParams) -> Result<Vec<Check>> {
    let predicted = predicted_extremal(p.n, p.k, p.d)?;
    let n_mid = p.n_mid();
    let (lower, upper) = theorem_bounds(n_mid, p.k, p.alpha)?;
    let lam = quotient_spectral_radius(&predicted, p.alpha);
    let parts = predicted.parts();
    let max_degree = (0..parts.len())
        .map(|i| {
            let left = if i > 0 { parts[i - 1] } else { 0 };
            let right = parts.get(i + 1).copied().unwrap_or(0);
            left + parts[i] - 1 + right
        })
        .max()
        .unwrap_or(0);
    let label = predicted.to_string();
    let al = Some(p.alpha.value());
    // the big cell only has two k-sized neighbours once d >= 4
    let degree_identity = Check::close(
        label.clone(),
        al,
        "n_mid + 2k - 1 = max degree",
        upper,
        max_degree as f64,
        0.0,
    );
    Ok(vec![
        Check::less(label.clone(), al, "lower bound < lambda", lower, lam, STRICT_MARGIN),
        Check::less(label.clone(), al, "lambda < n_mid + 2k - 1", lam, upper, STRICT_MARGIN),
        if p.d >= 4 {
            degree_identity
        } else {
            degree_identity.exploratory()
        },
        Check::less(
            label,
            al,
            "star bound at max degree < lambda",
            delta_lower_bound(max_degree, p.alpha),
            lam,
            STRICT_MARGIN,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predicted_extremal(8, 2, 3).unwrap().parts(), &[1, 4, 2, 1]);
        assert_eq!(predicted_extremal(10, 2, 4).unwrap().parts(), &[1, 2, 4, 2, 1]);
        assert_eq!(predicted_extremal(7, 2, 3).unwrap().parts(), &[1, 3, 2, 1]);
        assert_eq!(predicted_extremal(9, 3, 2).unwrap().parts(), &[1, 7, 1]);
        assert!(matches!(
            predicted_extremal(5, 2, 4),
            Err(Error::Infeasible { needed: 8, .. })
        ));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(enumerate_critical_class(10, 2, 4).count(), 6);
        let v: Vec<_> = enumerate_critical_class(7, 2, 3).map(|s| s.parts().to_vec()).collect();
        assert_eq!(v, vec![vec![1, 2, 3, 1], vec![1, 3, 2, 1]]);
        assert_eq!(enumerate_critical_class(8, 2, 4).count(), 1);
        assert_eq!(enumerate_critical_class(7, 2, 4).count(), 0);
        assert_eq!(enumerate_critical_class(9, 3, 2).count(), 1);
    }

    #[test]
    fn compositions_are_distinct_and_valid() {
        let all: Vec<JoinSpec> = enumerate_critical_class(16, 2, 6).collect();
        // 14 into 5 parts >= 2: C(4 + 4, 4)
        assert_eq!(all.len(), 70);
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for s in &all {
            assert_eq!(s.order(), 16);
            assert!(s.parts()[1..6].iter().all(|&p| p >= 2));
        }
    }

    #[test]
    fn critical_examples() {
        let r = search_critical_class(&SearchParams::new(10, 2, 4, al(0.5), Mode::CriticalClass).unwrap()).unwrap();
        assert_eq!(r.best_specs.len(), 1);
        assert_eq!(r.best_specs[0].parts(), &[1, 2, 4, 2, 1]);
        assert!(r.matches_prediction);
        assert_eq!(r.graphs_examined, 6);

        let r = search_critical_class(&SearchParams::new(8, 2, 3, al(0.0), Mode::CriticalClass).unwrap()).unwrap();
        assert_eq!(r.best_specs[0].parts(), &[1, 2, 4, 1]);
        assert!(r.matches_prediction);

        let r = search_critical_class(&SearchParams::new(9, 3, 2, al(0.3), Mode::CriticalClass).unwrap()).unwrap();
        assert_eq!(r.best_specs[0].parts(), &[1, 7, 1]);
        assert_eq!(r.runner_up_gap, None);
    }

    #[test]
    fn params_validation() {
        assert!(matches!(
            SearchParams::new(5, 2, 4, al(0.0), Mode::CriticalClass),
            Err(Error::Infeasible { .. })
        ));
        assert!(matches!(
            SearchParams::new(8, 2, 2, al(0.0), Mode::Exhaustive),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(SearchParams::new(8, 1, 2, al(0.0), Mode::CriticalClass).is_err());
    }

    #[test]
    fn small_exhaustive_counts_every_labeled_graph() {
        let p = SearchParams::new(6, 2, 2, al(0.5), Mode::Exhaustive).unwrap();
        let r = search_exhaustive(&p).unwrap();
        assert_eq!(r.graphs_examined, 1 << 15);
        assert!(r.matches_prediction, "{r:?}");
        assert_eq!(r.best_graphs.len(), 1);
    }

    #[test]
    fn theorem_bounds_on_predicted() {
        let p = SearchParams::new(12, 2, 4, al(0.4), Mode::CriticalClass).unwrap();
        let checks = verify_theorem_bounds_on_argmax(&p).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:#?}");
        assert_eq!(checks[1].rhs, 9.0);
        let p = SearchParams::new(7, 2, 3, al(0.4), Mode::CriticalClass).unwrap();
        assert!(matches!(verify_theorem_bounds_on_argmax(&p), Err(Error::OutOfScope(_))));
    }

    #[test]
    fn displayed_lower_bound_overshoots_at_small_diameter() {
        // K1 v K4 v K1 has max degree 5, below n_mid + 2k - 1 = 7
        let p = SearchParams::new(6, 2, 2, al(0.6), Mode::CriticalClass).unwrap();
        let checks = verify_theorem_bounds_on_argmax(&p).unwrap();
        assert!(!checks[0].pass);
        assert!(checks[0].lhs > checks[0].rhs);
        assert!(checks[1].pass);
        assert!(checks[2].exploratory && !checks[2].pass);
        assert!(checks[3].pass);
    }

    #[test]
    fn leaders_merge_is_order_independent() {
        let vals = [3.0, 1.0, 3.0 + 1e-12, 2.0, 0.5, 2.5];
        let eq = |a: &usize, b: &usize| a == b;
        let mut forward = Leaders::new();
        for (i, v) in vals.iter().enumerate() {
            forward.offer(*v, i, eq);
        }
        let mut left = Leaders::new();
        let mut right = Leaders::new();
        for (i, v) in vals.iter().enumerate() {
            if i % 2 == 0 {
                left.offer(*v, i, eq)
            } else {
                right.offer(*v, i, eq)
            }
        }
        let merged = right.merge(left, eq);
        assert_eq!(merged.runner_up, forward.runner_up);
        let mut a = merged.members.clone();
        let mut b = forward.members.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(forward.runner_up, 2.5);
    }
}
