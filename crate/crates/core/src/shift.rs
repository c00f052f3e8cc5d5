//! Kelmans-type edge shifts: detach a neighbourhood set `W` from a source
//! block `U` and attach it to a target block `V`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Source, target and moved-neighbourhood vertex sets of a shift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftMove {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub moved: Vec<usize>,
}

impl ShiftMove {
    /// Single-vertex move `G - {uw : w in Y} + {vw : w in Y}`.
    pub fn single(u: usize, v: usize, moved: Vec<usize>) -> Self {
        ShiftMove {
            source: vec![u],
            target: vec![v],
            moved,
        }
    }
}

fn to_mask(g: &Graph, set: &[usize], what: &str) -> Result<u64> {
    let mut mask = 0u64;
    for &v in set {
        if v >= g.order() {
            return Err(Error::InvalidMove(format!("{what} vertex {v} out of range")));
        }
        if mask >> v & 1 == 1 {
            return Err(Error::InvalidMove(format!("{what} vertex {v} repeated")));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

/// Remove the `U`-`W` biclique and add the `V`-`W` biclique.
pub fn apply_shift(g: &Graph, mv: &ShiftMove) -> Result<Graph> {
    let u = to_mask(g, &mv.source, "source")?;
    let v = to_mask(g, &mv.target, "target")?;
    let w = to_mask(g, &mv.moved, "moved")?;
    if u == 0 || v == 0 {
        return Err(Error::InvalidMove("source and target must be non-empty".into()));
    }
    if w == 0 {
        return Err(Error::InvalidMove("moved neighbourhood is empty".into()));
    }
    if mv.source.len() != mv.target.len() {
        return Err(Error::InvalidMove(format!(
            "source has {} vertices but target has {}",
            mv.source.len(),
            mv.target.len()
        )));
    }
    if u & v != 0 {
        return Err(Error::InvalidMove("source and target overlap".into()));
    }
    if w & (u | v) != 0 {
        return Err(Error::InvalidMove("moved set meets source or target".into()));
    }
    for a in bits(u) {
        if let Some(b) = bits(w & !g.neighbors(a)).next() {
            return Err(Error::InvalidMove(format!("({a}, {b}) is not an edge")));
        }
    }
    for a in bits(v) {
        if let Some(b) = bits(w & g.neighbors(a)).next() {
            return Err(Error::InvalidMove(format!("({a}, {b}) is already an edge")));
        }
    }
    let mut out = g.clone();
    for b in bits(w) {
        for a in bits(u) {
            out.remove(a, b);
        }
        for a in bits(v) {
            out.insert(a, b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, sequential_join, star, JoinSpec};

    #[test]
    fn path_to_star() {
        // v1 v2 v3 v4 = 0 1 2 3; move v4 from v3 to v2
        let g = path(4).unwrap();
        let h = apply_shift(&g, &ShiftMove::single(2, 1, vec![3])).unwrap();
        assert_eq!(h, star(3).unwrap().relabel(&[1, 0, 2, 3]).unwrap());
        assert_eq!(h.edge_count(), g.edge_count());
    }

    #[test]
    fn empty_move_rejected() {
        let g = path(4).unwrap();
        assert!(matches!(
            apply_shift(&g, &ShiftMove::single(2, 1, vec![])),
            Err(Error::InvalidMove(_))
        ));
    }

    #[test]
    fn precondition_violations_name_the_pair() {
        let g = path(4).unwrap();
        let e = apply_shift(&g, &ShiftMove::single(2, 1, vec![0])).unwrap_err();
        assert_eq!(e, Error::InvalidMove("(2, 0) is not an edge".into()));
        let e = apply_shift(&g, &ShiftMove::single(1, 3, vec![2])).unwrap_err();
        assert_eq!(e, Error::InvalidMove("(3, 2) is already an edge".into()));
    }

    #[test]
    fn block_shift_on_join() {
        let spec = JoinSpec::new(vec![1, 2, 2, 2, 1]).unwrap();
        let g = sequential_join(&spec).unwrap();
        let cells: Vec<Vec<usize>> = spec.cell_ranges().into_iter().map(|r| r.collect()).collect();
        let mv = ShiftMove {
            source: cells[3].clone(),
            target: cells[1].clone(),
            moved: cells[4].clone(),
        };
        let h = apply_shift(&g, &mv).unwrap();
        for &a in &cells[3] {
            for &b in &cells[4] {
                assert!(!h.has_edge(a, b));
            }
        }
        for &a in &cells[1] {
            for &b in &cells[4] {
                assert!(h.has_edge(a, b));
            }
        }
        assert_eq!(h.edge_count(), g.edge_count());
        let changed: Vec<_> = g.edges().filter(|&(a, b)| !h.has_edge(a, b)).collect();
        assert_eq!(changed.len(), 2);
    }

    #[test]
    fn unequal_blocks_rejected() {
        let g = path(5).unwrap();
        let mv = ShiftMove {
            source: vec![1, 2],
            target: vec![4],
            moved: vec![0],
        };
        assert!(apply_shift(&g, &mv).is_err());
    }
}
