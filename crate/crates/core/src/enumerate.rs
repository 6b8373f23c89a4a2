//! Labeled graph enumeration by edge mask.
//!
//! Bit `i` of a mask selects the `i`-th vertex pair in the order
//! `(0,1), (0,2), ..., (0,n-1), (1,2), ...`; graphs are produced in
//! ascending mask order.

use alloc::vec::Vec;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Largest order enumerated unless the caller raises the cap.
pub const DEFAULT_MAX_ORDER: usize = 7;
/// Hard ceiling: the edge mask must fit a `u64`.
pub const HARD_MAX_ORDER: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("order must be at least 1")]
    Empty,
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The vertex pairs in mask-bit order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// The graph whose edge set is selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut adj = alloc::vec![VertexSet::EMPTY; n];
    for (i, (u, v)) in pairs(n).into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Graph::from_adjacency(adj).expect("mask graphs are simple")
}

/// Iterator over labeled graphs of one order.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl LabeledGraphs {
    fn build(&self, mask: u64) -> Graph {
        let mut adj = alloc::vec![VertexSet::EMPTY; self.n];
        let mut m = mask;
        while m != 0 {
            let (u, v) = self.pairs[m.trailing_zeros() as usize];
            adj[u].insert(v);
            adj[v].insert(u);
            m &= m - 1;
        }
        Graph::from_adjacency(adj).expect("mask graphs are simple")
    }
}

impl Iterator for LabeledGraphs {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<(u64, Graph)> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let g = self.build(mask);
            if !self.connected_only || g.is_connected() {
                return Some((mask, g));
            }
        }
        None
    }
}

/// All labeled graphs of order `n` (with their masks), optionally only the
/// connected ones. `cap` bounds `n`; pass [`DEFAULT_MAX_ORDER`] unless
/// overridden.
pub fn enumerate_labeled_graphs(
    n: usize,
    connected_only: bool,
    cap: usize,
) -> Result<LabeledGraphs, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::Empty);
    }
    let cap = cap.min(HARD_MAX_ORDER);
    if n > cap {
        return Err(EnumerateError::AboveCap { n, cap });
    }
    Ok(LabeledGraphs {
        n,
        pairs: pairs(n),
        next: 0,
        end: 1u64 << pair_count(n),
        connected_only,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, connected: bool) -> usize {
        enumerate_labeled_graphs(n, connected, DEFAULT_MAX_ORDER)
            .unwrap()
            .count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(1, false), 1);
        assert_eq!(count(2, false), 2);
        assert_eq!(count(2, true), 1);
        assert_eq!(count(3, false), 8);
        assert_eq!(count(3, true), 4);
        assert_eq!(count(4, true), 38);
    }

    #[test]
    fn mask_order_and_layout() {
        let masks: Vec<u64> = enumerate_labeled_graphs(3, false, 7)
            .unwrap()
            .map(|(m, _)| m)
            .collect();
        assert_eq!(masks, (0..8).collect::<Vec<_>>());
        let g = graph_from_mask(4, 0b100001);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn caps() {
        assert_eq!(
            enumerate_labeled_graphs(8, false, DEFAULT_MAX_ORDER).unwrap_err(),
            EnumerateError::AboveCap { n: 8, cap: 7 }
        );
        assert!(enumerate_labeled_graphs(8, false, 8).is_ok());
        assert!(enumerate_labeled_graphs(12, false, 20).is_err());
        assert_eq!(
            enumerate_labeled_graphs(0, false, 7).unwrap_err(),
            EnumerateError::Empty
        );
    }
}
