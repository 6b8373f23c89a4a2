//! Domination predicates and exact solvers for the domination number, the
//! certified domination number and their upper variants.
//!
//! All four invariants decompose over connected components, so the solvers
//! run on each component separately and add the results. Witnesses are the
//! lexicographically smallest optimal set (comparing ascending member lists);
//! the union of per-component lexicographic minima is the global one because
//! every optimal set restricts to an optimal set on each component.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    /// Domination number γ.
    Gamma,
    /// Certified domination number γ_cer.
    GammaCer,
    /// Upper domination number Γ.
    UpperGamma,
    /// Upper certified domination number Γ_cer.
    UpperGammaCer,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 4] = [
        InvariantKind::Gamma,
        InvariantKind::GammaCer,
        InvariantKind::UpperGamma,
        InvariantKind::UpperGammaCer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InvariantKind::Gamma => "gamma",
            InvariantKind::GammaCer => "gamma_cer",
            InvariantKind::UpperGamma => "upper_gamma",
            InvariantKind::UpperGammaCer => "upper_gamma_cer",
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, InvariantKind::UpperGamma | InvariantKind::UpperGammaCer)
    }

    /// Whether `d` satisfies the defining predicate of this kind (dominating,
    /// certified dominating, minimal dominating, minimal certified dominating).
    pub fn accepts(self, g: &Graph, d: VertexSet) -> bool {
        match self {
            InvariantKind::Gamma => is_dominating(g, d),
            InvariantKind::GammaCer => is_certified_dominating(g, d),
            InvariantKind::UpperGamma => is_minimal_dominating(g, d),
            InvariantKind::UpperGammaCer => is_minimal_certified_dominating(g, d),
        }
    }
}

/// Proof data attached to a solver answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// No valid set of any size up to `below` exists (searched exhaustively
    /// or ruled out by a sound lower bound).
    Exhausted { below: usize },
    /// One private neighbor for each member of a minimal dominating set.
    PrivateNeighbors(Vec<(usize, usize)>),
    /// Every proper subset of the witness was checked and none is certified
    /// dominating.
    NoCertifiedProperSubset { subsets_checked: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    pub value: usize,
    pub witness: VertexSet,
    pub certificate: Certificate,
    pub n: usize,
}

impl InvariantResult {
    /// Re-checks the witness and the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if g.order() != self.n
            || self.witness.len() != self.value
            || !self.witness.is_subset(g.vertices())
            || !self.kind.accepts(g, self.witness)
        {
            return false;
        }
        match &self.certificate {
            Certificate::Exhausted { below } => {
                !self.kind.is_upper() && *below + 1 == self.value
            }
            Certificate::PrivateNeighbors(pairs) => {
                pairs.len() == self.value
                    && pairs.iter().all(|&(v, p)| {
                        g.private_neighborhood(v, self.witness, true)
                            .is_ok_and(|pn| pn.contains(p))
                    })
            }
            Certificate::NoCertifiedProperSubset { subsets_checked } => {
                *subsets_checked + 1 == 1u64 << self.value.min(63)
            }
        }
    }
}

/// Per-invariant order caps applied by front ends before calling a solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    pub gamma: usize,
    pub gamma_cer: usize,
    pub upper_gamma: usize,
    pub upper_gamma_cer: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            gamma: 20,
            gamma_cer: 20,
            upper_gamma: 14,
            upper_gamma_cer: 12,
        }
    }
}

impl SolverLimits {
    pub fn max_order(&self, kind: InvariantKind) -> usize {
        match kind {
            InvariantKind::Gamma => self.gamma,
            InvariantKind::GammaCer => self.gamma_cer,
            InvariantKind::UpperGamma => self.upper_gamma,
            InvariantKind::UpperGammaCer => self.upper_gamma_cer,
        }
    }

    pub fn allows(&self, kind: InvariantKind, n: usize) -> bool {
        n <= self.max_order(kind)
    }
}

// ---------------------------------------------------------------------------
// Predicates

/// `N[D] = V`.
#[inline]
pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    g.closed_set_neighborhood(d) == g.vertices()
}

/// Number of neighbors of `v` outside `d`.
#[inline]
pub fn outside_degree(g: &Graph, v: usize, d: VertexSet) -> usize {
    (g.neighbors(v) - d).len()
}

/// No member of `d` has exactly one neighbor outside `d`.
#[inline]
pub fn is_certified(g: &Graph, d: VertexSet) -> bool {
    d.iter().all(|v| outside_degree(g, v, d) != 1)
}

pub fn is_certified_dominating(g: &Graph, d: VertexSet) -> bool {
    is_dominating(g, d) && is_certified(g, d)
}

/// Dominating, and every member has a non-empty private neighborhood.
pub fn is_minimal_dominating(g: &Graph, d: VertexSet) -> bool {
    is_dominating(g, d) && d.iter().all(|v| private_neighbor(g, v, d).is_some())
}

fn private_neighbor(g: &Graph, v: usize, d: VertexSet) -> Option<usize> {
    let others = g.closed_set_neighborhood(d.without(v));
    (g.closed(v) - others).first()
}

/// Certified dominating with no certified dominating proper subset.
///
/// Certified domination is not closed under supersets, so a single-vertex
/// deletion test is not enough; all proper subsets are examined.
pub fn is_minimal_certified_dominating(g: &Graph, d: VertexSet) -> bool {
    is_certified_dominating(g, d) && certified_proper_subset(g, d).is_none()
}

/// Smallest-size certified dominating proper subset of `d`, if any.
pub fn certified_proper_subset(g: &Graph, d: VertexSet) -> Option<VertexSet> {
    let all = g.vertices();
    for size in 1..d.len() {
        let mut found = None;
        for_each_subset_of_size(d, size, |s| {
            if g.closed_set_neighborhood(s) == all && is_certified(g, s) {
                found = Some(s);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Calls `f` on every `size`-subset of `within` until it returns `false`.
fn for_each_subset_of_size(within: VertexSet, size: usize, mut f: impl FnMut(VertexSet) -> bool) {
    let m = within.len();
    if size > m {
        return;
    }
    if size == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let bits = within.bits();
    let limit: u128 = 1u128 << m;
    let mut packed: u128 = (1u128 << size) - 1;
    loop {
        if !f(VertexSet::from_bits(deposit(packed as u64, bits))) {
            return;
        }
        // Gosper's hack: next integer with the same popcount
        let low = packed & packed.wrapping_neg();
        let ripple = packed + low;
        packed = (((ripple ^ packed) >> 2) / low) | ripple;
        if packed >= limit {
            return;
        }
    }
}

/// Scatters the low bits of `packed` onto the set bits of `mask`.
#[inline]
fn deposit(mut packed: u64, mut mask: u64) -> u64 {
    let mut out = 0;
    while packed != 0 && mask != 0 {
        let low = mask & mask.wrapping_neg();
        if packed & 1 == 1 {
            out |= low;
        }
        packed >>= 1;
        mask &= mask - 1;
    }
    out
}

/// The sets `p(X)` (exactly one outside neighbor) and `q(X)` (at most one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeficiencyReport {
    pub exactly_one: VertexSet,
    pub at_most_one: VertexSet,
}

pub fn deficiency(g: &Graph, d: VertexSet) -> DeficiencyReport {
    let mut exactly_one = VertexSet::EMPTY;
    let mut at_most_one = VertexSet::EMPTY;
    for v in d.iter() {
        match outside_degree(g, v, d) {
            0 => at_most_one.insert(v),
            1 => {
                exactly_one.insert(v);
                at_most_one.insert(v);
            }
            _ => {}
        }
    }
    DeficiencyReport {
        exactly_one,
        at_most_one,
    }
}

// ---------------------------------------------------------------------------
// Lexicographic k-subset search with domination pruning

struct LexSearch<'g> {
    g: &'g Graph,
    n: usize,
    all: VertexSet,
    /// `suffix_reach[i] = N[{i, .., n-1}]`
    suffix_reach: Vec<VertexSet>,
    max_closed: usize,
}

impl<'g> LexSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let mut suffix_reach = alloc::vec![VertexSet::EMPTY; n + 1];
        for i in (0..n).rev() {
            suffix_reach[i] = suffix_reach[i + 1] | g.closed(i);
        }
        LexSearch {
            g,
            n,
            all: g.vertices(),
            suffix_reach,
            max_closed: g.max_degree() + 1,
        }
    }

    /// Visits every dominating `k`-set in lexicographic order; `visit`
    /// returns `false` to stop. Returns whether the search was stopped.
    fn run(&self, k: usize, visit: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if k > self.n {
            return false;
        }
        self.step(k, 0, VertexSet::EMPTY, VertexSet::EMPTY, visit)
    }

    fn step(
        &self,
        k: usize,
        start: usize,
        chosen: VertexSet,
        dominated: VertexSet,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        let undominated = self.all - dominated;
        let remaining = k - chosen.len();
        if remaining == 0 {
            return undominated.is_empty() && !visit(chosen);
        }
        if !undominated.is_subset(self.suffix_reach[start])
            || undominated.len() > remaining * self.max_closed
        {
            return false;
        }
        // the smallest undominated vertex needs a dominator at or after `start`
        let last = match undominated.first() {
            Some(u) => self.g.closed(u).last().unwrap_or(0),
            None => self.n - 1,
        };
        let end = last.min(self.n - remaining);
        for i in start..=end {
            if self.step(k, i + 1, chosen.with(i), dominated | self.g.closed(i), visit) {
                return true;
            }
        }
        false
    }

    fn first(&self, k: usize, accept: impl Fn(VertexSet) -> bool) -> Option<VertexSet> {
        let mut found = None;
        self.run(k, &mut |s| {
            if accept(s) {
                found = Some(s);
                false
            } else {
                true
            }
        });
        found
    }

    fn all_of(&self, k: usize, accept: impl Fn(VertexSet) -> bool) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.run(k, &mut |s| {
            if accept(s) {
                out.push(s);
            }
            true
        });
        out
    }
}

// ---------------------------------------------------------------------------
// Domination number by branch and bound

/// Minimum dominating set size via branch and bound: branch on the
/// undominated vertex with the fewest available dominators, prune with a
/// coverage lower bound against a greedy incumbent.
pub fn gamma_value(g: &Graph) -> usize {
    let greedy = greedy_dominating(g);
    let mut best = greedy.len();
    bnb(g, g.vertices(), g.vertices(), 0, &mut best);
    best
}

fn greedy_dominating(g: &Graph) -> VertexSet {
    let mut undominated = g.vertices();
    let mut d = VertexSet::EMPTY;
    while !undominated.is_empty() {
        let v = (0..g.order())
            .max_by_key(|&v| ((g.closed(v) & undominated).len(), core::cmp::Reverse(v)))
            .expect("non-empty graph");
        d.insert(v);
        undominated -= g.closed(v);
    }
    d
}

fn bnb(g: &Graph, undominated: VertexSet, allowed: VertexSet, used: usize, best: &mut usize) {
    if undominated.is_empty() {
        if used < *best {
            *best = used;
        }
        return;
    }
    if used + 1 >= *best {
        return;
    }
    let max_cover = allowed
        .iter()
        .map(|w| (g.closed(w) & undominated).len())
        .max()
        .unwrap_or(0);
    if max_cover == 0 {
        return;
    }
    let lower = undominated.len().div_ceil(max_cover);
    if used + lower >= *best {
        return;
    }
    let options = undominated
        .iter()
        .map(|u| g.closed(u) & allowed)
        .min_by_key(|opts| opts.len())
        .expect("non-empty");
    if options.is_empty() {
        return;
    }
    let mut order: Vec<usize> = options.to_vec();
    order.sort_by_key(|&w| core::cmp::Reverse((g.closed(w) & undominated).len()));
    let mut allowed = allowed;
    for w in order {
        bnb(g, undominated - g.closed(w), allowed, used + 1, best);
        // later branches need not use w: any solution with w was covered
        allowed.remove(w);
    }
}

/// Naive `2^n` scan for the domination number; kept as an oracle.
pub fn gamma_value_naive(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 30, "naive scan is for small graphs");
    (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&d| is_dominating(g, d))
        .map(|d| d.len())
        .min()
        .unwrap_or(n)
}

// ---------------------------------------------------------------------------
// Solvers

fn per_component(g: &Graph, solve: impl Fn(&Graph) -> (usize, VertexSet)) -> (usize, VertexSet) {
    if g.is_connected() {
        return solve(g);
    }
    let mut value = 0;
    let mut witness = VertexSet::EMPTY;
    for comp in g.components() {
        let (v, w) = solve(&comp.graph);
        value += v;
        witness |= comp.lift(w);
    }
    (value, witness)
}

fn solve_gamma(g: &Graph) -> (usize, VertexSet) {
    let k = gamma_value(g);
    let w = LexSearch::new(g)
        .first(k, |_| true)
        .expect("branch and bound value is attained");
    (k, w)
}

fn solve_gamma_cer(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    let search = LexSearch::new(g);
    let start = gamma_value(g);
    for k in start..=n {
        // no set of n-1 vertices is certified: the outside vertex would be
        // the single outside neighbor of each of its neighbors
        if k + 1 == n && n > 1 {
            continue;
        }
        if let Some(w) = search.first(k, |s| is_certified(g, s)) {
            return (k, w);
        }
    }
    unreachable!("the full vertex set is certified dominating")
}

fn solve_upper_gamma(g: &Graph) -> (usize, VertexSet) {
    let search = LexSearch::new(g);
    for k in (1..=g.order()).rev() {
        if let Some(w) = search.first(k, |s| is_minimal_dominating(g, s)) {
            return (k, w);
        }
    }
    unreachable!("every graph has a minimal dominating set")
}

fn solve_upper_gamma_cer(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    let search = LexSearch::new(g);
    for k in (1..=n).rev() {
        if k + 1 == n && n > 1 {
            continue;
        }
        let found = search.first(k, |s| {
            is_certified(g, s) && certified_proper_subset(g, s).is_none()
        });
        if let Some(w) = found {
            return (k, w);
        }
    }
    unreachable!("every graph has a minimal certified dominating set")
}

/// Domination number with a lexicographically smallest γ-set.
pub fn gamma(g: &Graph) -> InvariantResult {
    let (value, witness) = per_component(g, solve_gamma);
    InvariantResult {
        kind: InvariantKind::Gamma,
        value,
        witness,
        certificate: Certificate::Exhausted { below: value - 1 },
        n: g.order(),
    }
}

/// Certified domination number with a lexicographically smallest
/// γ_cer-set.
pub fn gamma_cer(g: &Graph) -> InvariantResult {
    let (value, witness) = per_component(g, solve_gamma_cer);
    InvariantResult {
        kind: InvariantKind::GammaCer,
        value,
        witness,
        certificate: Certificate::Exhausted { below: value - 1 },
        n: g.order(),
    }
}

/// Upper domination number with a lexicographically smallest Γ-set.
pub fn upper_gamma(g: &Graph) -> InvariantResult {
    let (value, witness) = per_component(g, solve_upper_gamma);
    let pairs = witness
        .iter()
        .map(|v| (v, private_neighbor(g, v, witness).expect("minimal witness")))
        .collect();
    InvariantResult {
        kind: InvariantKind::UpperGamma,
        value,
        witness,
        certificate: Certificate::PrivateNeighbors(pairs),
        n: g.order(),
    }
}

/// Upper certified domination number with a lexicographically smallest
/// Γ_cer-set.
pub fn upper_gamma_cer(g: &Graph) -> InvariantResult {
    let (value, witness) = per_component(g, solve_upper_gamma_cer);
    InvariantResult {
        kind: InvariantKind::UpperGammaCer,
        value,
        witness,
        certificate: Certificate::NoCertifiedProperSubset {
            subsets_checked: (1u64 << value.min(63)) - 1,
        },
        n: g.order(),
    }
}

pub fn solve(g: &Graph, kind: InvariantKind) -> InvariantResult {
    match kind {
        InvariantKind::Gamma => gamma(g),
        InvariantKind::GammaCer => gamma_cer(g),
        InvariantKind::UpperGamma => upper_gamma(g),
        InvariantKind::UpperGammaCer => upper_gamma_cer(g),
    }
}

/// Whether some certified dominating set has exactly `k` vertices.
pub fn has_certified_dominating_set_of_size(g: &Graph, k: usize) -> bool {
    LexSearch::new(g).first(k, |s| is_certified(g, s)).is_some()
}

/// All dominating `k`-sets satisfying `accept`, in lexicographic order.
pub fn dominating_sets_of_size(
    g: &Graph,
    k: usize,
    accept: impl Fn(VertexSet) -> bool,
) -> Vec<VertexSet> {
    LexSearch::new(g).all_of(k, accept)
}

/// The lexicographically first dominating `k`-set satisfying `accept`.
pub fn first_dominating_set_of_size(
    g: &Graph,
    k: usize,
    accept: impl Fn(VertexSet) -> bool,
) -> Option<VertexSet> {
    LexSearch::new(g).first(k, accept)
}

/// Every optimal set for `kind` (all γ-sets, γ_cer-sets, Γ-sets or
/// Γ_cer-sets), in lexicographic order.
pub fn optimal_sets(g: &Graph, kind: InvariantKind) -> Vec<VertexSet> {
    let value = solve(g, kind).value;
    dominating_sets_of_size(g, value, |s| kind.accepts(g, s))
}

/// Every minimal dominating (or minimal certified dominating) set, found by
/// filtering all subsets. Intended for small graphs (`n <= 24` or so).
pub fn enumerate_minimal_sets(g: &Graph, certified: bool) -> impl Iterator<Item = VertexSet> + '_ {
    let n = g.order();
    assert!(n < 64, "subset enumeration needs n < 64");
    (1u64..1 << n).map(VertexSet::from_bits).filter(move |&d| {
        if certified {
            is_minimal_certified_dominating(g, d)
        } else {
            is_minimal_dominating(g, d)
        }
    })
}

/// A γ-set in which every member has at least two neighbors outside it, if
/// one exists. Requires a connected graph of order at least three.
pub fn gamma_equality_witness(g: &Graph) -> Result<Option<VertexSet>, GraphError> {
    if g.order() < 3 {
        return Err(GraphError::TooSmall {
            required: 3,
            actual: g.order(),
        });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let k = gamma_value(g);
    Ok(LexSearch::new(g).first(k, |s| s.iter().all(|v| outside_degree(g, v, s) >= 2)))
}

/// The γ-set, when exactly one dominating set has γ vertices.
pub fn unique_gamma_set(g: &Graph) -> Option<VertexSet> {
    let k = gamma_value(g);
    let mut seen = Vec::with_capacity(2);
    LexSearch::new(g).run(k, &mut |s| {
        seen.push(s);
        seen.len() < 2
    });
    if seen.len() == 1 {
        seen.pop()
    } else {
        None
    }
}

/// `γ(G - v)` for every vertex `v`.
pub fn gamma_vertex_deleted_profile(g: &Graph) -> Result<Vec<usize>, GraphError> {
    if g.order() < 2 {
        return Err(GraphError::TooSmall {
            required: 2,
            actual: g.order(),
        });
    }
    (0..g.order())
        .map(|v| g.delete_vertex(v).map(|h| gamma(&h).value))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Independent oracle: scan every subset.
    fn brute(g: &Graph, kind: InvariantKind) -> usize {
        let n = g.order();
        let sets = (1u64..1 << n).map(VertexSet::from_bits);
        let ok = |d: VertexSet| -> bool {
            let dom = (0..n).all(|v| d.contains(v) || (0..n).any(|u| d.contains(u) && g.has_edge(u, v)));
            let cert = d.iter().all(|v| (0..n).filter(|&u| !d.contains(u) && g.has_edge(u, v)).count() != 1);
            match kind {
                InvariantKind::Gamma | InvariantKind::UpperGamma => dom,
                _ => dom && cert,
            }
        };
        let good: Vec<VertexSet> = sets.filter(|&d| ok(d)).collect();
        match kind {
            InvariantKind::Gamma | InvariantKind::GammaCer => good.iter().map(|d| d.len()).min().unwrap(),
            _ => good
                .iter()
                .filter(|&&d| !good.iter().any(|&e| e != d && e.is_subset(d)))
                .map(|d| d.len())
                .max()
                .unwrap(),
        }
    }

    #[test]
    fn predicate_examples() {
        assert!(is_dominating(&cycle(4), set(&[0, 2])));
        assert!(!is_dominating(&path(4), set(&[0])));
        assert!(is_dominating(&cycle(7), VertexSet::full(7)));

        assert!(!is_certified_dominating(&path(4), set(&[1, 2])));
        assert!(is_certified_dominating(&path(4), VertexSet::full(4)));
        assert!(!is_certified_dominating(&cycle(4), set(&[0])));
        assert!(is_certified_dominating(&cycle(4), set(&[0, 2])));

        assert!(is_minimal_dominating(&cycle(5), set(&[0, 2])));
        assert!(!is_minimal_dominating(&cycle(4), set(&[0, 1, 2])));
        assert!(is_minimal_dominating(&edgeless(1), set(&[0])));

        assert!(is_minimal_certified_dominating(&path(4), VertexSet::full(4)));
        assert!(!is_minimal_certified_dominating(&cycle(4), VertexSet::full(4)));
        assert!(is_minimal_certified_dominating(&edgeless(1), set(&[0])));
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(deficiency(&path(4), set(&[1, 2])).exactly_one, set(&[1, 2]));
        let r = deficiency(&cycle(4), set(&[0, 2]));
        assert!(r.exactly_one.is_empty() && r.at_most_one.is_empty());
        let r = deficiency(&path(2), set(&[0, 1]));
        assert_eq!(r.at_most_one, set(&[0, 1]));
        assert!(r.exactly_one.is_empty());
    }

    #[test]
    fn solver_examples() {
        assert_eq!(gamma(&path(6)).value, 2);
        assert_eq!(gamma(&complete(5)).value, 1);
        assert_eq!(gamma(&complete_bipartite(3, 4)).value, 2);

        assert_eq!(gamma_cer(&path(4)).value, 4);
        assert_eq!(gamma_cer(&cycle(7)).value, 3);
        assert_eq!(gamma_cer(&star(5)).value, 1);

        assert_eq!(upper_gamma(&star(4)).value, 4);
        assert_eq!(upper_gamma(&cycle(6)).value, 3);
        assert_eq!(upper_gamma(&path(6)).value, 3);

        assert_eq!(upper_gamma_cer(&path(7)).value, 3);
        assert_eq!(upper_gamma_cer(&complete_bipartite(2, 3)).value, 3);
        assert_eq!(upper_gamma_cer(&cycle(5)).value, 2);
    }

    #[test]
    fn tiny_edge_cases() {
        let k1 = edgeless(1);
        for kind in InvariantKind::ALL {
            assert_eq!(solve(&k1, kind).value, 1);
        }
        let k2 = path(2);
        assert_eq!(gamma(&k2).value, 1);
        assert_eq!(gamma_cer(&k2).value, 2);
        assert_eq!(upper_gamma(&k2).value, 1);
        assert_eq!(upper_gamma_cer(&k2).value, 2);
    }

    #[test]
    fn witnesses_verify_and_are_lex_smallest() {
        let g = cycle(6);
        let r = gamma(&g);
        assert_eq!(r.witness, set(&[0, 3]));
        for kind in InvariantKind::ALL {
            let r = solve(&g, kind);
            assert!(r.verify(&g), "{kind:?}");
            let all = optimal_sets(&g, kind);
            assert_eq!(all[0], r.witness);
        }
    }

    #[test]
    fn disconnected_graphs_sum_components() {
        // K2 ∪ C4
        let g = Graph::from_edge_list(6, &[(0, 1), (2, 3), (3, 4), (4, 5), (5, 2)]).unwrap();
        assert_eq!(gamma(&g).value, 3);
        assert_eq!(gamma_cer(&g).value, 4);
        assert_eq!(upper_gamma(&g).value, 3);
        assert_eq!(upper_gamma_cer(&g).value, 4);
        for kind in InvariantKind::ALL {
            let r = solve(&g, kind);
            assert!(r.verify(&g));
            assert_eq!(r.value, brute(&g, kind));
        }
    }

    #[test]
    fn matches_brute_force_on_small_families() {
        let graphs = [
            path(5),
            cycle(5),
            complete(4),
            star(3),
            complete_bipartite(2, 3),
            edgeless(3),
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap(),
        ];
        for g in &graphs {
            for kind in InvariantKind::ALL {
                assert_eq!(solve(g, kind).value, brute(g, kind), "{g:?} {kind:?}");
            }
        }
    }

    #[test]
    fn enumerate_minimal_examples() {
        let k2 = path(2);
        let plain: Vec<_> = enumerate_minimal_sets(&k2, false).collect();
        assert_eq!(plain, [set(&[0]), set(&[1])]);
        let cert: Vec<_> = enumerate_minimal_sets(&k2, true).collect();
        assert_eq!(cert, [set(&[0, 1])]);
        // P3: {1} is certified; {0,1,2} has the proper subset {1}; no other
        // subset is certified dominating
        let cert: Vec<_> = enumerate_minimal_sets(&path(3), true).collect();
        assert_eq!(cert, [set(&[1])]);
    }

    #[test]
    fn equality_witness_examples() {
        let w = gamma_equality_witness(&cycle(6)).unwrap().unwrap();
        assert!(is_dominating(&cycle(6), w) && w.len() == 2);
        assert_eq!(gamma_equality_witness(&path(4)).unwrap(), None);
        assert_eq!(gamma_equality_witness(&star(3)).unwrap(), Some(set(&[0])));
        assert!(gamma_equality_witness(&path(2)).is_err());
        assert!(gamma_equality_witness(&edgeless(3)).is_err());
    }

    #[test]
    fn unique_gamma_examples() {
        assert_eq!(unique_gamma_set(&path(3)), Some(set(&[1])));
        assert_eq!(unique_gamma_set(&cycle(4)), None);
        assert_eq!(unique_gamma_set(&complete(3)), None);
    }

    #[test]
    fn deleted_profile_examples() {
        assert_eq!(gamma_vertex_deleted_profile(&cycle(4)).unwrap(), [1, 1, 1, 1]);
        assert_eq!(gamma_vertex_deleted_profile(&path(3)).unwrap()[1], 2);
        assert!(gamma_vertex_deleted_profile(&edgeless(1)).is_err());
    }

    #[test]
    fn subset_iteration_by_size() {
        let within = set(&[1, 3, 4, 9]);
        for size in 0..=4 {
            let mut seen = Vec::new();
            for_each_subset_of_size(within, size, |s| {
                seen.push(s);
                true
            });
            let expected = crate::bitset::k_subsets(within, size).count();
            assert_eq!(seen.len(), expected);
            assert!(seen.iter().all(|s| s.len() == size && s.is_subset(within)));
        }
        let mut count = 0;
        for_each_subset_of_size(VertexSet::full(64), 1, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 64);
    }

    #[test]
    fn limits_default() {
        let l = SolverLimits::default();
        assert!(l.allows(InvariantKind::Gamma, 20));
        assert!(!l.allows(InvariantKind::UpperGamma, 15));
        assert!(!l.allows(InvariantKind::UpperGammaCer, 13));
    }
}
