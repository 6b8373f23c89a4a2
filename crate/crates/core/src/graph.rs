//! Immutable simple undirected graphs with bitset adjacency.

use alloc::vec::Vec;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_VERTICES}, got {0}")]
    BadOrder(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} is outside 0..{1}")]
    VertexOutOfRange(usize, usize),
    #[error("vertex {0} is not a member of the given set")]
    NotInSet(usize),
    #[error("graph must be connected")]
    Disconnected,
    #[error("operation requires at least {required} vertices, graph has {actual}")]
    TooSmall { required: usize, actual: usize },
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let mut adj = alloc::vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if row.contains(v) {
                return Err(GraphError::Loop(v));
            }
            if !row.is_subset(all) {
                let u = (*row - all).first().unwrap_or(n);
                return Err(GraphError::EndpointOutOfRange(v, u, n));
            }
            for u in row.iter() {
                if !adj[u].contains(v) {
                    return Err(GraphError::EndpointOutOfRange(v, u, n));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edge_list(n, &[])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Checked variant of [`closed`](Self::closed).
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Minimum degree, `δ(G)`.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Open neighborhood of a set, `N(X)`.
    pub fn open_set_neighborhood(&self, x: VertexSet) -> VertexSet {
        x.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// Closed neighborhood of a set, `N[X]`.
    #[inline]
    pub fn closed_set_neighborhood(&self, x: VertexSet) -> VertexSet {
        self.open_set_neighborhood(x) | x
    }

    /// Private neighborhood of `v` with respect to `x`: the closed variant is
    /// `N[v] - N[X - {v}]`, the open variant `N(v) - N[X - {v}]`.
    pub fn private_neighborhood(
        &self,
        v: usize,
        x: VertexSet,
        closed: bool,
    ) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        if !x.contains(v) {
            return Err(GraphError::NotInSet(v));
        }
        let others = self.closed_set_neighborhood(x.without(v));
        let base = if closed { self.closed(v) } else { self.adj[v] };
        Ok(base - others)
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Classifies leaves and supports.
    pub fn leaf_support_report(&self) -> LeafSupportReport {
        let leaves = self.leaves();
        let mut supports = VertexSet::EMPTY;
        let mut strong = VertexSet::EMPTY;
        for v in 0..self.n {
            let k = (self.adj[v] & leaves).len();
            if k >= 1 {
                supports.insert(v);
            }
            if k >= 2 {
                strong.insert(v);
            }
        }
        LeafSupportReport {
            leaves,
            supports,
            weak_supports: supports - strong,
            strong_supports: strong,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_set_neighborhood(frontier) & within;
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Whether `G[within]` is connected. The empty set is not.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => false,
            Some(v) => self.reach(v, within) == within,
        }
    }

    /// Induced subgraph on `keep`; vertex `i` of the result is the `i`-th
    /// smallest member of `keep`.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph, GraphError> {
        let keep = keep & self.vertices();
        if keep.is_empty() {
            return Err(GraphError::BadOrder(0));
        }
        let adj = keep
            .iter()
            .map(|v| keep.compress(self.adj[v] & keep))
            .collect();
        Ok(Graph { n: keep.len(), adj })
    }

    /// `G - v`, with vertices above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if self.n < 2 {
            return Err(GraphError::TooSmall {
                required: 2,
                actual: self.n,
            });
        }
        self.induced(self.vertices().without(v))
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut rest = self.vertices();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, rest);
            rest -= comp;
            out.push(Component {
                vertices: comp,
                graph: self.induced(comp).expect("non-empty component"),
            });
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadOrder(perm.len()));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if image != self.vertices() {
            return Err(GraphError::VertexOutOfRange(
                perm.iter().copied().max().unwrap_or(0),
                self.n,
            ));
        }
        let mut adj = alloc::vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// True iff no four vertices induce a path.
    pub fn is_p4_free(&self) -> bool {
        // An induced P4 a-b-c-d has a middle edge bc with a ∈ N(b)−N[c],
        // d ∈ N(c)−N[b], and a, d non-adjacent.
        for (b, c) in self.edges() {
            let ends_b = self.adj[b] - self.closed(c);
            let ends_c = self.adj[c] - self.closed(b);
            for a in ends_b.iter() {
                if !(ends_c - self.adj[a]).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }
}

/// A connected component together with its induced subgraph. Vertex `i` of
/// `graph` is the `i`-th smallest member of `vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: VertexSet,
    pub graph: Graph,
}

impl Component {
    /// Maps a set over the component graph back to the parent graph.
    pub fn lift(&self, local: VertexSet) -> VertexSet {
        self.vertices.expand(local)
    }
}

/// Leaves, supports, weak supports and strong supports of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafSupportReport {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub weak_supports: VertexSet,
    pub strong_supports: VertexSet,
}

/// Common small graphs, mostly for tests and examples.
pub mod named {
    use super::Graph;
    use alloc::vec::Vec;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).expect("valid clique")
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let edges: Vec<_> = (0..m)
            .flat_map(|u| (m..m + n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(m + n, &edges).expect("valid biclique")
    }

    /// `K_{1,n}` with center 0.
    pub fn star(n: usize) -> Graph {
        complete_bipartite(1, n)
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::empty(n).expect("valid order")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use alloc::vec;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, path(4));
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, cycle(5));
        let dup = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup, k2);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange(0, 3, 3))
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(GraphError::BadOrder(0)));
        assert_eq!(Graph::from_edge_list(65, &[]), Err(GraphError::BadOrder(65)));
        assert!(Graph::from_edge_list(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(complete(3).closed_neighborhood(0).unwrap(), set(&[0, 1, 2]));
        assert_eq!(path(4).closed_neighborhood(0).unwrap(), set(&[0, 1]));
        assert_eq!(cycle(5).closed_neighborhood(2).unwrap(), set(&[1, 2, 3]));
        assert!(cycle(5).closed_neighborhood(5).is_err());
    }

    #[test]
    fn min_degrees() {
        assert_eq!(cycle(6).min_degree(), 2);
        assert_eq!(star(3).min_degree(), 1);
        assert_eq!(edgeless(1).min_degree(), 0);
    }

    #[test]
    fn leaf_support_examples() {
        let r = path(3).leaf_support_report();
        assert_eq!(r.leaves, set(&[0, 2]));
        assert_eq!(r.supports, set(&[1]));
        assert_eq!(r.strong_supports, set(&[1]));
        assert!(r.weak_supports.is_empty());

        let r = path(4).leaf_support_report();
        assert_eq!(r.leaves, set(&[0, 3]));
        assert_eq!(r.supports, set(&[1, 2]));
        assert_eq!(r.weak_supports, set(&[1, 2]));
        assert!(r.strong_supports.is_empty());

        let r = cycle(4).leaf_support_report();
        assert!(r.leaves.is_empty() && r.supports.is_empty());
    }

    #[test]
    fn private_neighborhood_examples() {
        let p4 = path(4);
        assert_eq!(p4.private_neighborhood(1, set(&[1, 2]), true).unwrap(), set(&[0]));
        assert_eq!(
            complete(3).private_neighborhood(0, set(&[0]), true).unwrap(),
            set(&[0, 1, 2])
        );
        assert_eq!(
            cycle(4).private_neighborhood(0, set(&[0, 2]), true).unwrap(),
            set(&[0])
        );
        assert!(cycle(4).private_neighborhood(0, set(&[0, 2]), false).unwrap().is_empty());
        assert_eq!(
            p4.private_neighborhood(0, set(&[1, 2]), true),
            Err(GraphError::NotInSet(0))
        );
    }

    #[test]
    fn p4_freeness() {
        assert!(!path(4).is_p4_free());
        assert!(cycle(4).is_p4_free());
        assert!(!cycle(5).is_p4_free());
        assert!(complete(5).is_p4_free());
        assert!(complete_bipartite(3, 4).is_p4_free());
    }

    #[test]
    fn components_examples() {
        let k2_c4 =
            Graph::from_edge_list(6, &[(0, 1), (2, 3), (3, 4), (4, 5), (5, 2)]).unwrap();
        let comps = k2_c4.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].graph.order(), 2);
        assert_eq!(comps[1].graph, cycle(4));
        assert_eq!(comps[1].lift(set(&[0])), set(&[2]));
        assert_eq!(cycle(5).components().len(), 1);
        let e3 = edgeless(3).components();
        assert_eq!(e3.len(), 3);
        assert!(e3.iter().all(|c| c.graph.order() == 1));
    }

    #[test]
    fn induced_and_delete() {
        let c5 = cycle(5);
        assert_eq!(c5.delete_vertex(0).unwrap(), path(4));
        assert!(edgeless(1).delete_vertex(0).is_err());
        let g = c5.induced(set(&[0, 2, 3])).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn relabel_preserves_edges() {
        let p = path(4);
        let q = p.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(q, path(4));
        let r = p.relabel(&[1, 0, 2, 3]).unwrap();
        assert!(r.has_edge(0, 1) && r.has_edge(0, 2) && r.has_edge(2, 3) && !r.has_edge(1, 2));
        assert!(p.relabel(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn adjacency_constructor_checks_symmetry() {
        let rows = vec![set(&[1]), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(rows).is_err());
        let rows = vec![set(&[1]), set(&[0])];
        assert_eq!(Graph::from_adjacency(rows).unwrap(), path(2));
    }
}
