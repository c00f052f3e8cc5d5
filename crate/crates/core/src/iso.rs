//! Isomorphism test for small graphs: colour refinement, then a
//! backtracking search over colour-compatible bijections.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order accepted by [`are_isomorphic`].
pub const MAX_ISO_ORDER: usize = 12;

/// Stable colourings of two graphs, refined jointly so colour ids are
/// comparable between them.
fn joint_refinement(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut c1: Vec<usize> = g1.degrees();
    let mut c2: Vec<usize> = g2.degrees();
    let mut classes = 0;
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut around: Vec<usize> = bits(g.neighbors(v)).map(|w| c[w]).collect();
            around.sort_unstable();
            (c[v], around)
        };
        let s1: Vec<_> = (0..g1.order()).map(|v| sig(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..g2.order()).map(|v| sig(g2, &c2, v)).collect();
        for s in s1.iter().chain(&s2) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        c1 = s1.iter().map(|s| palette[s]).collect();
        c2 = s2.iter().map(|s| palette[s]).collect();
        if palette.len() == classes {
            return (c1, c2);
        }
        classes = palette.len();
    }
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > MAX_ISO_ORDER {
            return Err(Error::UnsupportedSize {
                n: g.order(),
                limit: MAX_ISO_ORDER,
            });
        }
    }
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    let (c1, c2) = joint_refinement(g1, g2);
    if histogram(&c1) != histogram(&c2) {
        return Ok(false);
    }

    // Map g1's vertices, rarest colour class first.
    let h = histogram(&c1);
    let mut order: Vec<usize> = (0..g1.order()).collect();
    order.sort_by_key(|&v| (h[&c1[v]], c1[v], v));

    let mut image = vec![usize::MAX; g1.order()];
    Ok(extend(g1, g2, &c1, &c2, &order, 0, &mut image, 0))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[usize],
    c2: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..g2.order() {
        if used >> w & 1 == 1 || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        if extend(g1, g2, c1, c2, order, depth + 1, image, used | 1 << w) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, sequential_join, JoinSpec};

    #[test]
    fn relabeled_path() {
        let p = path(4).unwrap();
        let q = p.relabel(&[2, 0, 3, 1]).unwrap();
        assert!(are_isomorphic(&p, &q).unwrap());
    }

    #[test]
    fn cycle_vs_path() {
        assert!(!are_isomorphic(&cycle(4).unwrap(), &path(4).unwrap()).unwrap());
    }

    #[test]
    fn joins_with_swapped_cells() {
        let a = sequential_join(&JoinSpec::new(vec![1, 4, 2, 1]).unwrap()).unwrap();
        let b = sequential_join(&JoinSpec::new(vec![1, 2, 4, 1]).unwrap()).unwrap();
        let c = sequential_join(&JoinSpec::new(vec![1, 3, 3, 1]).unwrap()).unwrap();
        // (1,4,2,1) is the reversal of (1,2,4,1)
        assert!(are_isomorphic(&a, &b).unwrap());
        assert!(!are_isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 versus two disjoint triangles: same degrees, refinement is stuck,
        // backtracking must separate them.
        let c6 = cycle(6).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt).unwrap());
        assert!(are_isomorphic(&c6, &c6.relabel(&[5, 3, 1, 0, 2, 4]).unwrap()).unwrap());
    }

    #[test]
    fn size_guard() {
        let big = path(13).unwrap();
        assert!(matches!(are_isomorphic(&big, &big), Err(Error::UnsupportedSize { .. })));
    }
}
