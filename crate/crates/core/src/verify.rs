//! Seeded verification suites over the lemmas, closed forms, quotient
//! reduction, Perron structure and edge shifts.
//!
//! Random inputs are drawn sequentially from a ChaCha stream and evaluated
//! in parallel with order-preserving collection, so output depends only on
//! the seed.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{all_pass, Check, STRICT_MARGIN};
use crate::error::{Error, Result};
use crate::graph::{bits, complete, sequential_join, star, Graph, JoinSpec};
use crate::oracle;
use crate::perron::{check_monotonicity_oriented, recurrence_roots, GldSpec};
use crate::quotient::{
    cubic_join, quad_equal_lambda, quad_join_lambda, quad_join_lambda_printed, quotient_spectral_radius,
    symmetric_join_lambda, triple_equal_lambda,
};
use crate::shift::{apply_shift, ShiftMove};
use crate::spectra::{degree_bounds, delta_lower_bound, largest_eigenvalue, spectral_radius, Alpha};

/// Agreement required between two routes to the same eigenvalue.
pub const AGREEMENT: f64 = 1e-8;
/// Perron entries closer than this make `x_v >= x_u` numerically
/// undecidable; such shift trials are redrawn.
pub const AMBIGUOUS_GAP: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lemmas,
    ClosedForms,
    Perron,
    Quotient,
    Shifts,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemmas" => Suite::Lemmas,
            "closed-forms" => Suite::ClosedForms,
            "perron" => Suite::Perron,
            "quotient" => Suite::Quotient,
            "shifts" => Suite::Shifts,
            "all" => Suite::All,
            other => return Err(Error::InvalidParameter(format!("unknown suite {other:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Lemmas => "lemmas",
            Suite::ClosedForms => "closed-forms",
            Suite::Perron => "perron",
            Suite::Quotient => "quotient",
            Suite::Shifts => "shifts",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Random draws discarded because a precondition failed.
    pub redrawn: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_failure())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random trials per randomized check family.
    pub trials: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 1, trials: 200 }
    }
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<Vec<SuiteReport>> {
    Ok(match suite {
        Suite::Lemmas => vec![lemma_suite(opts)?],
        Suite::ClosedForms => vec![closed_form_suite()?],
        Suite::Perron => vec![perron_suite()?],
        Suite::Quotient => vec![quotient_suite(14)?],
        Suite::Shifts => {
            let single = (opts.trials * 5).div_ceil(7);
            vec![shift_suite(opts.seed, single, opts.trials - single)?]
        }
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Lemmas,
                Suite::ClosedForms,
                Suite::Perron,
                Suite::Quotient,
                Suite::Shifts,
            ] {
                out.extend(run_suite(s, opts)?);
            }
            out
        }
    })
}

// ---------------------------------------------------------------------------
// Random inputs

/// Connected G(n, p) sample, redrawn until connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.8);
    loop {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Replace vertex `v` of `g` by `copies` twins sharing its neighbourhood,
/// mutually adjacent when `clique`. Twins get the highest labels.
fn blow_up(g: &Graph, v: usize, copies: usize, clique: bool) -> Result<(Graph, Vec<usize>)> {
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let twins: Vec<usize> = std::iter::once(v).chain(n..n + copies - 1).collect();
    for &t in &twins[1..] {
        for w in bits(g.neighbors(v)) {
            edges.push((w, t));
        }
    }
    if clique {
        for (i, &a) in twins.iter().enumerate() {
            for &b in &twins[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Ok((Graph::from_edges(n + copies - 1, &edges)?, twins))
}

// ---------------------------------------------------------------------------
// Suites

fn label(g: &Graph) -> String {
    crate::graph6::emit_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

pub fn lemma_suite(opts: VerifyOptions) -> Result<SuiteReport> {
    let grid = Alpha::grid(10);
    let mut checks = Vec::new();

    for n in 2..=50 {
        let g = complete(n)?;
        for &a in &grid {
            let lam = spectral_radius(&g, a)?.lambda;
            checks.push(Check::close(
                format!("K{n}"),
                Some(a.value()),
                "lambda = n - 1",
                lam,
                n as f64 - 1.0,
                1e-9,
            ));
        }
    }

    for delta in 1..=8 {
        let s = star(delta)?;
        for &a in &grid {
            let lam = spectral_radius(&s, a)?.lambda;
            let bound = delta_lower_bound(delta, a);
            checks.push(Check::close(
                format!("K1,{delta}"),
                Some(a.value()),
                "delta bound attained by star",
                bound,
                lam,
                AGREEMENT,
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let inputs: Vec<(Graph, Alpha, (usize, usize))> = (0..opts.trials)
        .map(|_| {
            let n = rng.gen_range(2..=10);
            let g = random_connected_graph(&mut rng, n);
            let a = *grid.choose(&mut rng).expect("non-empty grid");
            let edges: Vec<_> = g.edges().collect();
            let e = *edges.choose(&mut rng).expect("connected graph has an edge");
            (g, a, e)
        })
        .collect();

    let random: Vec<Vec<Check>> = inputs
        .par_iter()
        .map(|(g, a, (u, v))| -> Result<Vec<Check>> {
            let name = label(g);
            let al = Some(a.value());
            let r = spectral_radius(g, *a)?;
            let (lo, hi) = degree_bounds(g, *a)?;
            let tol = 1e-9 * r.lambda.max(1.0);
            let delta = delta_lower_bound(g.max_degree(), *a);
            let sub = largest_eigenvalue(&g.without_edge(*u, *v)?, *a)?;
            Ok(vec![
                Check::less(name.clone(), al, "2m/n <= lambda", lo - tol, r.lambda, 0.0),
                Check::less(
                    name.clone(),
                    al,
                    "lambda <= max edge degree mix",
                    r.lambda - tol,
                    hi,
                    0.0,
                ),
                Check::less(name.clone(), al, "delta bound <= lambda", delta - tol, r.lambda, 0.0),
                Check::less(
                    name.clone(),
                    al,
                    format!("lambda(G - {u}{v}) < lambda(G)"),
                    sub,
                    r.lambda,
                    STRICT_MARGIN,
                ),
                Check::close(
                    name.clone(),
                    Some(0.0),
                    "alpha=0 matches adjacency radius",
                    spectral_radius(g, Alpha::ZERO)?.lambda,
                    oracle::adjacency_radius(g),
                    AGREEMENT,
                ),
                Check::close(
                    name,
                    Some(0.5),
                    "2 lambda_1/2 matches signless Laplacian radius",
                    2.0 * spectral_radius(g, Alpha::HALF)?.lambda,
                    oracle::signless_laplacian_radius(g),
                    AGREEMENT,
                ),
            ])
        })
        .collect::<Result<_>>()?;
    checks.extend(random.into_iter().flatten());

    // equal Perron entries inside each cell of random joins
    for _ in 0..opts.trials.min(100) {
        let cells = rng.gen_range(1..=6);
        let parts: Vec<usize> = (0..cells).map(|_| rng.gen_range(1..=4)).collect();
        let spec = JoinSpec::new(parts)?;
        let a = *grid.choose(&mut rng).expect("non-empty grid");
        let r = spectral_radius(&sequential_join(&spec)?, a)?;
        let spread = spec
            .cell_ranges()
            .into_iter()
            .map(|rg| {
                let s = &r.perron[rg];
                s.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - s.iter().cloned().fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        checks.push(Check::close(
            spec.to_string(),
            Some(a.value()),
            "equal Perron entries within cells",
            spread,
            0.0,
            1e-8,
        ));
    }

    Ok(SuiteReport {
        suite: Suite::Lemmas.to_string(),
        checks,
        redrawn: 0,
    })
}

/// Closed-form agreement over every family member of order at most 20.
pub fn closed_form_suite() -> Result<SuiteReport> {
    const MAX_ORDER: usize = 20;
    let grid = Alpha::grid(10);
    let mut jobs: Vec<(&'static str, usize, usize)> = Vec::new();
    for k in 1..=MAX_ORDER / 3 {
        jobs.push(("triple-equal", k, k));
    }
    for n1 in 1..MAX_ORDER {
        for n2 in 1..MAX_ORDER {
            if 2 * n1 + n2 <= MAX_ORDER {
                jobs.push(("symmetric", n1, n2));
            }
            if 2 * (n1 + n2) <= MAX_ORDER {
                jobs.push(("quad", n1, n2));
            }
        }
    }
    let mut cubic_jobs = Vec::new();
    for n1 in 1..=MAX_ORDER {
        for n2 in 1..=MAX_ORDER {
            for n3 in 1..=MAX_ORDER {
                if n1 + n2 + n3 <= MAX_ORDER {
                    cubic_jobs.push((n1, n2, n3));
                }
            }
        }
    }

    let mut checks: Vec<Check> = jobs
        .par_iter()
        .map(|&(family, n1, n2)| -> Result<Vec<Check>> {
            let mut out = Vec::new();
            for &a in &grid {
                let al = Some(a.value());
                let (spec, closed) = match family {
                    "triple-equal" => (JoinSpec::new(vec![n1; 3])?, triple_equal_lambda(n1, a)),
                    "symmetric" => (JoinSpec::new(vec![n1, n2, n1])?, symmetric_join_lambda(n1, n2, a)),
                    _ => (JoinSpec::new(vec![n1, n2, n2, n1])?, quad_join_lambda(n1, n2, a)),
                };
                let name = spec.to_string();
                let q = quotient_spectral_radius(&spec, a);
                let full = spectral_radius(&sequential_join(&spec)?, a)?.lambda;
                out.push(Check::close(
                    name.clone(),
                    al,
                    format!("{family} closed form = quotient"),
                    closed,
                    q,
                    AGREEMENT,
                ));
                out.push(Check::close(
                    name.clone(),
                    al,
                    format!("{family} closed form = full radius"),
                    closed,
                    full,
                    AGREEMENT,
                ));
                if family == "quad" {
                    if n1 == n2 {
                        out.push(Check::close(
                            name.clone(),
                            al,
                            "quad k-formula = quotient",
                            quad_equal_lambda(n1, a),
                            q,
                            AGREEMENT,
                        ));
                    }
                    let printed = quad_join_lambda_printed(n1, n2, a);
                    out.push(
                        Check::close(
                            name.clone(),
                            al,
                            "typeset general quad expression = quotient",
                            printed,
                            q,
                            AGREEMENT,
                        )
                        .exploratory(),
                    );
                }
                if family == "triple-equal" {
                    out.push(Check::close(
                        name.clone(),
                        al,
                        "triple-equal = symmetric(k, k)",
                        triple_equal_lambda(n1, a),
                        symmetric_join_lambda(n1, n1, a),
                        1e-10,
                    ));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let cubic: Vec<Check> = cubic_jobs
        .par_iter()
        .map(|&(n1, n2, n3)| -> Result<Vec<Check>> {
            let spec = JoinSpec::new(vec![n1, n2, n3])?;
            let name = spec.to_string();
            let mut out = Vec::new();
            for &a in &grid {
                let al = Some(a.value());
                let f = cubic_join(n1, n2, n3, a)?;
                let root = f.largest_root();
                let scale = root.abs().max(1.0).powi(3);
                out.push(Check::close(
                    name.clone(),
                    al,
                    "|f(lambda)| relative",
                    f.eval(root) / scale,
                    0.0,
                    1e-8,
                ));
                out.push(Check::close(
                    name.clone(),
                    al,
                    "cubic root = quotient",
                    root,
                    quotient_spectral_radius(&spec, a),
                    AGREEMENT,
                ));
                if let Some([r1, r2, r3]) = f.real_roots() {
                    out.push(Check::holds(
                        name.clone(),
                        al,
                        "largest root dominates",
                        r3 >= r2 - 1e-12 && r3 >= r1 - 1e-12 && (r3 - root).abs() < 1e-8,
                    ));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    checks.extend(cubic);
    Ok(SuiteReport {
        suite: Suite::ClosedForms.to_string(),
        checks,
        redrawn: 0,
    })
}

/// All compositions of `total` as join specs.
pub fn all_join_specs(total: usize) -> Vec<JoinSpec> {
    // compositions of `total` correspond to subsets of the total-1 gaps
    if total == 0 {
        return Vec::new();
    }
    (0..1u64 << (total - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for gap in 0..total - 1 {
                if cuts >> gap & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            JoinSpec::new(parts).expect("positive parts")
        })
        .collect()
}

/// Quotient against full-graph radius for every join of order up to
/// `max_order`, over the ten-point alpha grid.
pub fn quotient_suite(max_order: usize) -> Result<SuiteReport> {
    let specs: Vec<JoinSpec> = (1..=max_order).flat_map(all_join_specs).collect();
    let checks = specs
        .par_iter()
        .map(|spec| -> Result<Vec<Check>> {
            let g = sequential_join(spec)?;
            Alpha::grid(10)
                .into_iter()
                .map(|a| {
                    let q = quotient_spectral_radius(spec, a);
                    let full = spectral_radius(&g, a)?.lambda;
                    Ok(Check::close(
                        spec.to_string(),
                        Some(a.value()),
                        "quotient = full radius",
                        q,
                        full,
                        AGREEMENT,
                    ))
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(SuiteReport {
        suite: Suite::Quotient.to_string(),
        checks,
        redrawn: 0,
    })
}

/// Every `G(l, d-l)` with `d` in 2..=8, `k` in {2, 3},
/// `n_mid` in {2k, 2k+1, 2k+3}, at the five alpha values. Only `l >= d - l`
/// is listed since `G(l, d-l)` and `G(d-l, l)` are isomorphic.
pub fn perron_grid() -> Vec<(GldSpec, Alpha)> {
    let alphas = [0.0, 0.25, 0.5, 0.75, 0.9].map(|v| Alpha::new(v).expect("in range"));
    let mut out = Vec::new();
    for d in 2..=8usize {
        for l in d.div_ceil(2)..d {
            for k in [2, 3] {
                for n_mid in [2 * k, 2 * k + 1, 2 * k + 3] {
                    for a in alphas {
                        out.push((GldSpec::new(d, l, k, n_mid).expect("valid grid point"), a));
                    }
                }
            }
        }
    }
    out
}

pub fn perron_suite() -> Result<SuiteReport> {
    let checks = perron_grid()
        .par_iter()
        .map(|(spec, a)| -> Result<Vec<Check>> {
            let report = check_monotonicity_oriented(spec, *a)?;
            let mut out = report.checks;
            // the characteristic roots are only claimed above 3k - 1
            if report.lambda <= 3.0 * spec.k as f64 - 1.0 {
                return Ok(out);
            }
            let roots = recurrence_roots(report.lambda, spec.k, *a)?;
            let name = format!("{:?}", report.spec);
            let al = Some(a.value());
            let kf = spec.k as f64;
            let sum = (report.lambda - 2.0 * kf * a.value() + 1.0 - kf) / ((1.0 - a.value()) * kf);
            out.push(Check::close(
                name.clone(),
                al,
                "t1 * t2 = 1",
                roots.t1 * roots.t2,
                1.0,
                1e-10,
            ));
            out.push(Check::close(
                name.clone(),
                al,
                "t1 + t2 = (lambda - 2k alpha + 1 - k) / ((1 - alpha) k)",
                roots.t1 + roots.t2,
                sum,
                1e-10,
            ));
            out.push(Check::holds(
                name,
                al,
                "t1 > 1 > t2 > 0",
                roots.t1 > 1.0 && 1.0 > roots.t2 && roots.t2 > 0.0,
            ));
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(SuiteReport {
        suite: Suite::Perron.to_string(),
        checks,
        redrawn: 0,
    })
}

/// A drawn shift trial: the graph, the move, and the alpha value.
#[derive(Debug, Clone)]
pub struct ShiftTrial {
    pub kind: &'static str,
    pub graph: Graph,
    pub mv: ShiftMove,
    pub alpha: Alpha,
    pub lambda: f64,
}

/// Single-vertex trial: `x_v >= x_u` and `Y` a random non-empty subset of
/// `N(u) \ (N(v) + v)`. `None` when the draw does not meet the hypotheses.
pub fn draw_single_shift(rng: &mut impl Rng) -> Result<Option<ShiftTrial>> {
    let n = rng.gen_range(3..=10);
    let g = random_connected_graph(rng, n);
    let a = *Alpha::grid(10).choose(rng).expect("non-empty grid");
    let r = spectral_radius(&g, a)?;
    let mut u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    if r.perron[v] < r.perron[u] {
        std::mem::swap(&mut u, &mut v);
    }
    if (r.perron[v] - r.perron[u]).abs() < AMBIGUOUS_GAP {
        return Ok(None);
    }
    let pool: Vec<usize> = bits(g.neighbors(u) & !g.neighbors(v) & !(1 << v)).collect();
    if pool.is_empty() {
        return Ok(None);
    }
    let mut moved: Vec<usize> = pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    if moved.is_empty() {
        moved.push(*pool.choose(rng).expect("non-empty"));
    }
    Ok(Some(ShiftTrial {
        kind: "single",
        graph: g,
        mv: ShiftMove::single(u, v, moved),
        alpha: a,
        lambda: r.lambda,
    }))
}

/// Block trial: two vertices of a random connected graph are blown up into
/// equally sized twin classes `U`, `V`; `W = N(U) \ (N(V) + V)`.
pub fn draw_block_shift(rng: &mut impl Rng) -> Result<Option<ShiftTrial>> {
    let copies = rng.gen_range(2..=3);
    let base_order = rng.gen_range(3..=10 - 2 * (copies - 1));
    let base = random_connected_graph(rng, base_order);
    let p = rng.gen_range(0..base_order);
    let mut q = rng.gen_range(0..base_order - 1);
    if q >= p {
        q += 1;
    }
    let (g1, mut first) = blow_up(&base, p, copies, rng.gen_bool(0.5))?;
    let (g, mut second) = blow_up(&g1, q, copies, rng.gen_bool(0.5))?;
    let a = *Alpha::grid(10).choose(rng).expect("non-empty grid");
    let r = spectral_radius(&g, a)?;
    if r.perron[second[0]] < r.perron[first[0]] {
        std::mem::swap(&mut first, &mut second);
    }
    let (source, target) = (first, second);
    if (r.perron[target[0]] - r.perron[source[0]]).abs() < AMBIGUOUS_GAP {
        return Ok(None);
    }
    let mask = |s: &[usize]| s.iter().fold(0u64, |m, &v| m | 1 << v);
    let (um, vm) = (mask(&source), mask(&target));
    let n_u = source.iter().fold(0u64, |m, &v| m | g.neighbors(v)) & !um;
    let n_v = target.iter().fold(0u64, |m, &v| m | g.neighbors(v));
    let moved: Vec<usize> = bits(n_u & !n_v & !vm).collect();
    if moved.is_empty() {
        return Ok(None);
    }
    Ok(Some(ShiftTrial {
        kind: "block",
        graph: g,
        mv: ShiftMove { source, target, moved },
        alpha: a,
        lambda: r.lambda,
    }))
}

pub fn evaluate_shift(t: &ShiftTrial) -> Result<Check> {
    let after = apply_shift(&t.graph, &t.mv)?;
    let lam = largest_eigenvalue(&after, t.alpha)?;
    Ok(Check::less(
        format!(
            "{} U={:?} V={:?} W={:?}",
            label(&t.graph),
            t.mv.source,
            t.mv.target,
            t.mv.moved
        ),
        Some(t.alpha.value()),
        format!("{} shift increases lambda", t.kind),
        t.lambda,
        lam,
        STRICT_MARGIN,
    ))
}

/// `single` single-vertex and `block` block shift trials.
pub fn shift_suite(seed: u64, single: usize, block: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trials = Vec::with_capacity(single + block);
    let mut redrawn = 0;
    while trials.len() < single {
        match draw_single_shift(&mut rng)? {
            Some(t) => trials.push(t),
            None => redrawn += 1,
        }
    }
    while trials.len() < single + block {
        match draw_block_shift(&mut rng)? {
            Some(t) => trials.push(t),
            None => redrawn += 1,
        }
    }
    let checks = trials.par_iter().map(evaluate_shift).collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        suite: Suite::Shifts.to_string(),
        checks,
        redrawn,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_spec_enumeration() {
        assert_eq!(all_join_specs(4).len(), 8);
        assert!(all_join_specs(5).iter().all(|s| s.order() == 5));
    }

    #[test]
    fn blow_up_makes_twins() {
        let p = crate::graph::path(3).unwrap();
        let (g, twins) = blow_up(&p, 1, 3, false).unwrap();
        assert_eq!(twins, vec![1, 3, 4]);
        assert_eq!(g.order(), 5);
        for &t in &twins {
            assert_eq!(g.neighbors(t), 0b101);
        }
        let (g, _) = blow_up(&p, 1, 2, true).unwrap();
        assert!(g.has_edge(1, 3));
    }

    #[test]
    fn shift_suite_is_deterministic() {
        let a = shift_suite(7, 10, 4).unwrap();
        let b = shift_suite(7, 10, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.checks.len(), 14);
        assert!(a.passed(), "{:#?}", a.failures().collect::<Vec<_>>());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::Lemmas,
            Suite::ClosedForms,
            Suite::Perron,
            Suite::Quotient,
            Suite::Shifts,
            Suite::All,
        ] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
