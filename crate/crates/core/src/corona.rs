//! Neighborhood partition families and the 𝒫-corona construction.
//!
//! For a graph `G` and a family `𝒫` assigning to each vertex `v` a partition
//! `𝒫(v)` of `N(v)`, the 𝒫-corona has one vertex `(v,1)` per vertex of `G`
//! and one vertex `(v,A)` per block `A ∈ 𝒫(v)`. Each `(v,1)` is joined to its
//! own block vertices, and every edge `uv` of `G` contributes the single cross
//! edge `(v,A)(u,B)` where `u ∈ A` and `v ∈ B`.
//!
//! Numbering: `(v,1)` is vertex `v`; block vertices follow in
//! `(v, block index)` order.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::domination::is_dominating;
use crate::graph::{Graph, GraphError};

/// One partition of `N(v)` per vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionFamily {
    blocks: Vec<Vec<VertexSet>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationReason {
    EmptyBlock,
    Overlap(usize),
    Missing(usize),
    Foreign(usize),
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationReason::EmptyBlock => write!(f, "empty block"),
            ViolationReason::Overlap(u) => write!(f, "vertex {u} appears in two blocks"),
            ViolationReason::Missing(u) => write!(f, "neighbor {u} is in no block"),
            ViolationReason::Foreign(u) => write!(f, "{u} is not a neighbor"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoronaError {
    #[error("family covers {actual} vertices but the graph has {expected}")]
    WrongLength { expected: usize, actual: usize },
    #[error("invalid partition at vertex {vertex}: {reason}")]
    Invalid {
        vertex: usize,
        reason: ViolationReason,
    },
    #[error("families are over different neighborhoods at vertex {0}")]
    Mismatch(usize),
    #[error("construction would have {0} vertices, more than {MAX_VERTICES}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl PartitionFamily {
    pub fn new(blocks: Vec<Vec<VertexSet>>) -> Self {
        PartitionFamily { blocks }
    }

    /// `𝒫(v) = {N(v)}` for every non-isolated `v`.
    pub fn trivial(g: &Graph) -> Self {
        let blocks = (0..g.order())
            .map(|v| {
                let nb = g.neighbors(v);
                if nb.is_empty() {
                    Vec::new()
                } else {
                    alloc::vec![nb]
                }
            })
            .collect();
        PartitionFamily { blocks }
    }

    /// `𝒫(v) = {{u} : u ∈ N(v)}`.
    pub fn singletons(g: &Graph) -> Self {
        let blocks = (0..g.order())
            .map(|v| g.neighbors(v).iter().map(VertexSet::singleton).collect())
            .collect();
        PartitionFamily { blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self, v: usize) -> &[VertexSet] {
        &self.blocks[v]
    }

    pub fn all_blocks(&self) -> &[Vec<VertexSet>] {
        &self.blocks
    }

    /// `|𝒫(v)|`.
    pub fn block_count(&self, v: usize) -> usize {
        self.blocks[v].len()
    }

    pub fn total_blocks(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Index of the block of `𝒫(v)` containing `u`.
    pub fn block_of(&self, v: usize, u: usize) -> Option<usize> {
        self.blocks[v].iter().position(|b| b.contains(u))
    }

    /// Vertices whose partition has at least two blocks.
    pub fn split_vertices(&self) -> VertexSet {
        (0..self.blocks.len())
            .filter(|&v| self.blocks[v].len() >= 2)
            .collect()
    }

    /// Sorts blocks by their smallest member so equal families compare equal.
    pub fn normalized(mut self) -> Self {
        for b in &mut self.blocks {
            b.sort_by(|x, y| x.cmp_lex(*y));
        }
        self
    }

    /// Checks that every `𝒫(v)` partitions `N(v)`.
    pub fn validate(&self, g: &Graph) -> Result<(), CoronaError> {
        if self.blocks.len() != g.order() {
            return Err(CoronaError::WrongLength {
                expected: g.order(),
                actual: self.blocks.len(),
            });
        }
        for (v, blocks) in self.blocks.iter().enumerate() {
            let nb = g.neighbors(v);
            let mut seen = VertexSet::EMPTY;
            for &b in blocks {
                let invalid = |reason| CoronaError::Invalid { vertex: v, reason };
                if b.is_empty() {
                    return Err(invalid(ViolationReason::EmptyBlock));
                }
                if let Some(u) = (b - nb).first() {
                    return Err(invalid(ViolationReason::Foreign(u)));
                }
                if let Some(u) = (b & seen).first() {
                    return Err(invalid(ViolationReason::Overlap(u)));
                }
                seen |= b;
            }
            if let Some(u) = (nb - seen).first() {
                return Err(CoronaError::Invalid {
                    vertex: v,
                    reason: ViolationReason::Missing(u),
                });
            }
        }
        Ok(())
    }

    /// `self ≺ coarser`: every block of `self(v)` lies inside a block of
    /// `coarser(v)`. Both families must partition the same neighborhoods.
    pub fn is_refinement_of(&self, coarser: &PartitionFamily) -> Result<bool, CoronaError> {
        if self.blocks.len() != coarser.blocks.len() {
            return Err(CoronaError::WrongLength {
                expected: coarser.blocks.len(),
                actual: self.blocks.len(),
            });
        }
        let union = |bs: &[VertexSet]| bs.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
        let mut refines = true;
        for v in 0..self.blocks.len() {
            if union(&self.blocks[v]) != union(&coarser.blocks[v]) {
                return Err(CoronaError::Mismatch(v));
            }
            refines &= self.blocks[v]
                .iter()
                .all(|a| coarser.blocks[v].iter().any(|b| a.is_subset(*b)));
        }
        Ok(refines)
    }
}

/// `P1 ≺ P2`.
pub fn is_refinement(p1: &PartitionFamily, p2: &PartitionFamily) -> Result<bool, CoronaError> {
    p1.is_refinement_of(p2)
}

pub fn validate_partition_family(g: &Graph, p: &PartitionFamily) -> Result<(), CoronaError> {
    p.validate(g)
}

/// Vertex tag in a 𝒫-corona.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoronaLabel {
    /// `(v,1)`
    Base(usize),
    /// `(v,A)`; `A` is empty only for the pendant that
    /// [`corona_k1`] attaches to an isolated vertex.
    Block(usize, VertexSet),
}

impl fmt::Display for CoronaLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoronaLabel::Base(v) => write!(f, "({v},1)"),
            CoronaLabel::Block(v, a) => write!(f, "({v},{a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PCoronaGraph {
    pub graph: Graph,
    pub labels: Vec<CoronaLabel>,
}

impl PCoronaGraph {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Index of the vertex carrying `label`.
    pub fn index_of(&self, label: CoronaLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

fn build(g: &Graph, blocks: &[Vec<VertexSet>]) -> Result<PCoronaGraph, CoronaError> {
    let n = g.order();
    let order = n + blocks.iter().map(Vec::len).sum::<usize>();
    if order > MAX_VERTICES {
        return Err(CoronaError::TooLarge(order));
    }
    let mut labels: Vec<CoronaLabel> = (0..n).map(CoronaLabel::Base).collect();
    let mut first_block = Vec::with_capacity(n);
    for (v, bs) in blocks.iter().enumerate() {
        first_block.push(labels.len());
        labels.extend(bs.iter().map(|&a| CoronaLabel::Block(v, a)));
    }
    let mut edges = Vec::with_capacity(order);
    for (v, bs) in blocks.iter().enumerate() {
        for i in 0..bs.len() {
            edges.push((v, first_block[v] + i));
        }
    }
    for (u, v) in g.edges() {
        // (v,A) with u ∈ A, and (u,B) with v ∈ B
        let a = blocks[v].iter().position(|b| b.contains(u));
        let b = blocks[u].iter().position(|b| b.contains(v));
        if let (Some(a), Some(b)) = (a, b) {
            edges.push((first_block[v] + a, first_block[u] + b));
        }
    }
    let graph = Graph::from_edge_list(order, &edges)?;
    Ok(PCoronaGraph { graph, labels })
}

/// The 𝒫-corona `G ∘ 𝒫`.
pub fn p_corona(g: &Graph, p: &PartitionFamily) -> Result<PCoronaGraph, CoronaError> {
    p.validate(g)?;
    build(g, &p.blocks)
}

/// The corona `G ∘ K1`: the trivial family, except that an isolated vertex
/// `v` also receives a pendant, tagged `(v, {})`.
pub fn corona_k1(g: &Graph) -> Result<PCoronaGraph, CoronaError> {
    let blocks: Vec<Vec<VertexSet>> = (0..g.order())
        .map(|v| alloc::vec![g.neighbors(v)])
        .collect();
    build(g, &blocks)
}

/// The 2-subdivision `S2(G)`: every edge `uv` becomes a path `u, u_e, v_e, v`.
pub fn two_subdivision(g: &Graph) -> Result<PCoronaGraph, CoronaError> {
    p_corona(g, &PartitionFamily::singletons(g))
}

/// `{u : |𝒫(u)| ≥ 2}` dominates `G`.
pub fn equality_predicate(g: &Graph, p: &PartitionFamily) -> Result<bool, CoronaError> {
    p.validate(g)?;
    Ok(is_dominating(g, p.split_vertices()))
}

/// Outcome of the maximality characterization for a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalityCertificate {
    pub maximal: bool,
    /// Every `|𝒫(v)| ≤ 2`.
    pub at_most_two_blocks: bool,
    /// `D = {v : |𝒫(v)| = 2}`.
    pub split_vertices: VertexSet,
    /// One private neighbor per member of `D` when `D` is a minimal
    /// dominating set.
    pub private_neighbors: Option<Vec<(usize, usize)>>,
}

/// Whether every `|𝒫(v)| ≤ 2` and `{v : |𝒫(v)| = 2}` is a minimal
/// dominating set.
pub fn is_maximal_family(g: &Graph, p: &PartitionFamily) -> Result<MaximalityCertificate, CoronaError> {
    p.validate(g)?;
    let at_most_two_blocks = (0..g.order()).all(|v| p.block_count(v) <= 2);
    let d: VertexSet = (0..g.order()).filter(|&v| p.block_count(v) == 2).collect();
    let private_neighbors = if is_dominating(g, d) {
        d.iter()
            .map(|v| {
                let pn = g.private_neighborhood(v, d, true).ok()?;
                pn.first().map(|u| (v, u))
            })
            .collect::<Option<Vec<_>>>()
    } else {
        None
    };
    Ok(MaximalityCertificate {
        maximal: at_most_two_blocks && private_neighbors.is_some(),
        at_most_two_blocks,
        split_vertices: d,
        private_neighbors,
    })
}

/// All set partitions of `set`, each as blocks ordered by smallest member,
/// generated from restricted growth strings.
pub fn set_partitions(set: VertexSet) -> Vec<Vec<VertexSet>> {
    let members = set.to_vec();
    let mut out = Vec::new();
    let mut rgs = alloc::vec![0usize; members.len()];
    fn rec(
        i: usize,
        max: usize,
        members: &[usize],
        rgs: &mut Vec<usize>,
        out: &mut Vec<Vec<VertexSet>>,
    ) {
        if i == members.len() {
            let mut blocks = alloc::vec![VertexSet::EMPTY; max];
            for (j, &b) in rgs.iter().enumerate() {
                blocks[b].insert(members[j]);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=max {
            rgs[i] = b;
            rec(i + 1, max.max(b + 1), members, rgs, out);
        }
    }
    rec(0, 0, &members, &mut rgs, &mut out);
    out
}

/// Every partition family of `G`, as the product of the set partitions of
/// each neighborhood.
pub fn all_families(g: &Graph) -> Vec<PartitionFamily> {
    let per_vertex: Vec<Vec<Vec<VertexSet>>> =
        (0..g.order()).map(|v| set_partitions(g.neighbors(v))).collect();
    let mut out = alloc::vec![Vec::<Vec<VertexSet>>::new()];
    for options in &per_vertex {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for opt in options {
                let mut p = prefix.clone();
                p.push(opt.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(PartitionFamily::new).collect()
}

/// Uniform random set partition of `set`. `pick(k)` must return a uniform
/// integer in `0..k`. Sets above 25 elements are not supported (the
/// partition counts overflow `u64`).
pub fn uniform_partition(set: VertexSet, pick: &mut impl FnMut(u64) -> u64) -> Vec<VertexSet> {
    let members = set.to_vec();
    let m = members.len();
    assert!(m <= 25, "uniform partition sampling supports at most 25 elements");
    // completions[r][b]: restricted growth tails of length r when b blocks
    // are already open
    let mut completions = alloc::vec![alloc::vec![0u64; m + 2]; m + 1];
    completions[0].fill(1);
    for r in 1..=m {
        for b in 0..=m {
            completions[r][b] = (b as u64) * completions[r - 1][b] + completions[r - 1][b + 1];
        }
    }
    let mut blocks: Vec<VertexSet> = Vec::new();
    for (i, &x) in members.iter().enumerate() {
        let r = m - i - 1;
        let b = blocks.len();
        let existing = completions[r][b];
        let fresh = completions[r][b + 1];
        let roll = pick(existing * b as u64 + fresh);
        let choice = (roll / existing.max(1)) as usize;
        if choice < b {
            blocks[choice].insert(x);
        } else {
            blocks.push(VertexSet::singleton(x));
        }
    }
    blocks
}

/// Uniform random family: an independent uniform partition of each
/// neighborhood.
pub fn random_family(g: &Graph, pick: &mut impl FnMut(u64) -> u64) -> PartitionFamily {
    PartitionFamily::new(
        (0..g.order())
            .map(|v| uniform_partition(g.neighbors(v), pick))
            .collect(),
    )
}

/// Random refinement of `p`: each block is split by a uniform partition.
pub fn random_refinement(p: &PartitionFamily, pick: &mut impl FnMut(u64) -> u64) -> PartitionFamily {
    PartitionFamily::new(
        p.blocks
            .iter()
            .map(|bs| {
                bs.iter()
                    .flat_map(|&b| uniform_partition(b, pick))
                    .collect()
            })
            .collect(),
    )
    .normalized()
}
