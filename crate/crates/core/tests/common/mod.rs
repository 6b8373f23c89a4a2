//! Brute-force oracles written against adjacency matrices, independent of
//! the bitset machinery under test.
#![allow(dead_code)]

use certidom_core::graph::Graph;
use proptest::prelude::*;

pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let adj = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        Matrix { n, adj }
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| mask >> v & 1 == 1)
    }

    pub fn dominating(&self, mask: u64) -> bool {
        (0..self.n).all(|v| mask >> v & 1 == 1 || self.members(mask).any(|u| self.adj[u][v]))
    }

    pub fn certified(&self, mask: u64) -> bool {
        self.members(mask).all(|v| {
            let out = (0..self.n)
                .filter(|&u| mask >> u & 1 == 0 && self.adj[v][u])
                .count();
            out != 1
        })
    }

    fn proper_subsets(mask: u64) -> impl Iterator<Item = u64> {
        // all s ⊊ mask, including the empty set
        let mut s = mask;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            s = s.wrapping_sub(1) & mask;
            if s == mask {
                done = true;
                return None;
            }
            let out = s;
            if s == 0 {
                done = true;
            }
            Some(out)
        })
    }

    pub fn minimal_dominating(&self, mask: u64) -> bool {
        self.dominating(mask) && Self::proper_subsets(mask).all(|s| !self.dominating(s))
    }

    pub fn minimal_certified(&self, mask: u64) -> bool {
        self.dominating(mask)
            && self.certified(mask)
            && Self::proper_subsets(mask).all(|s| !(self.dominating(s) && self.certified(s)))
    }

    fn best(&self, ok: impl Fn(u64) -> bool, max: bool) -> usize {
        let sizes = (0u64..1 << self.n).filter(|&m| ok(m)).map(|m| m.count_ones() as usize);
        if max {
            sizes.max().unwrap()
        } else {
            sizes.min().unwrap()
        }
    }

    pub fn gamma(&self) -> usize {
        self.best(|m| self.dominating(m), false)
    }

    pub fn gamma_cer(&self) -> usize {
        self.best(|m| self.dominating(m) && self.certified(m), false)
    }

    pub fn upper_gamma(&self) -> usize {
        self.best(|m| self.minimal_dominating(m), true)
    }

    pub fn upper_gamma_cer(&self) -> usize {
        self.best(|m| self.minimal_certified(m), true)
    }

    pub fn independence(&self) -> usize {
        self.best(
            |m| {
                self.members(m)
                    .all(|u| self.members(m).all(|v| !self.adj[u][v]))
            },
            true,
        )
    }

    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for (v, s) in seen.iter_mut().enumerate() {
                if self.adj[u][v] && !*s {
                    *s = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Strategy for a graph on `1..=max_n` vertices with independent edges.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// A graph together with a permutation of its vertices.
pub fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}
