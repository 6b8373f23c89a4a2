//! Structural recognizers: coronas, diadems, the two join forms, and the
//! independence number.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    Corona,
    SimpleDiadem,
    Diadem,
    JoinK2,
    JoinK2bar,
    Other,
}

impl StructureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureKind::Corona => "Corona",
            StructureKind::SimpleDiadem => "SimpleDiadem",
            StructureKind::Diadem => "Diadem",
            StructureKind::JoinK2 => "JoinK2",
            StructureKind::JoinK2bar => "JoinK2bar",
            StructureKind::Other => "Other",
        }
    }

    /// The labels whose graphs have upper certified domination number `n - 2`.
    pub fn is_near_full(self) -> bool {
        matches!(
            self,
            StructureKind::SimpleDiadem
                | StructureKind::Diadem
                | StructureKind::JoinK2
                | StructureKind::JoinK2bar
        )
    }
}

/// Role assignments that justify a [`StructureLabel`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Pairs `(core, leaf)`: every vertex appears in exactly one pair and
    /// `leaf` is a pendant vertex hanging off `core`.
    Corona { pairs: Vec<(usize, usize)> },
    /// The added vertex, its neighbors, and the corona pairing of `G - added`
    /// in the numbering of the original graph.
    Diadem {
        added: usize,
        attachment: VertexSet,
        pairs: Vec<(usize, usize)>,
    },
    /// The two dominating vertices of a join form.
    Join { pair: (usize, usize) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureLabel {
    pub kind: StructureKind,
    pub evidence: Option<Evidence>,
}

/// Corona test: every vertex is a leaf or adjacent to exactly one leaf, and
/// no vertex is isolated. Returns the leaf matching on success.
pub fn corona_pairing(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let leaves = g.leaves();
    let mut pairs = Vec::with_capacity(g.order() / 2);
    for v in 0..g.order() {
        let leaf_nbrs = g.neighbors(v) & leaves;
        if leaves.contains(v) {
            let s = g.neighbors(v).first()?;
            // K2 component: pair once, lower vertex as core
            if leaves.contains(s) && v < s {
                pairs.push((v, s));
            }
            continue;
        }
        if leaf_nbrs.len() != 1 {
            return None;
        }
        pairs.push((v, leaf_nbrs.first()?));
    }
    pairs.sort_unstable();
    Some(pairs)
}

pub fn is_corona(g: &Graph) -> bool {
    corona_pairing(g).is_some()
}

/// Checks a corona pairing against the graph directly: the pairs partition
/// the vertex set and each `leaf` has `core` as its only neighbor.
pub fn verify_corona_pairing(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &(c, l) in pairs {
        if c >= g.order() || l >= g.order() || seen.contains(c) || seen.contains(l) || c == l {
            return false;
        }
        seen.insert(c);
        seen.insert(l);
        if g.neighbors(l) != VertexSet::singleton(c) {
            return false;
        }
    }
    seen == g.vertices()
}

fn lift_pairs(keep: VertexSet, pairs: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let map = keep.to_vec();
    let mut out: Vec<_> = pairs.into_iter().map(|(c, l)| (map[c], map[l])).collect();
    out.sort_unstable();
    out
}

/// Supports of a corona that are not themselves leaves.
fn proper_supports(g: &Graph) -> VertexSet {
    let r = g.leaf_support_report();
    r.supports - r.leaves
}

/// Attachment rule on `G - x`, in the numbering of `rest`: one neighbor
/// that is a non-leaf support (simple diadem), or a leaf together with its
/// non-leaf support (diadem).
fn attachment_ok(rest: &Graph, local: VertexSet, simple: bool) -> bool {
    let supports = proper_supports(rest);
    if simple {
        return local.len() == 1 && local.is_subset(supports);
    }
    if local.len() != 2 {
        return false;
    }
    let leaves = rest.leaves();
    let mut it = local.iter();
    let (a, b) = (it.next().unwrap_or(0), it.next().unwrap_or(0));
    let support_leaf =
        |s: usize, l: usize| supports.contains(s) && leaves.contains(l) && rest.has_edge(s, l);
    support_leaf(a, b) || support_leaf(b, a)
}

/// Searches for an added vertex `x` with `G - x` a corona and the attachment
/// rule satisfied.
fn find_diadem(g: &Graph, simple: bool) -> Option<Evidence> {
    let n = g.order();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let want = if simple { 1 } else { 2 };
    for x in 0..n {
        let attachment = g.neighbors(x);
        if attachment.len() != want {
            continue;
        }
        let keep = g.vertices().without(x);
        let rest = g.induced(keep).ok()?;
        let Some(pairs) = corona_pairing(&rest) else {
            continue;
        };
        if attachment_ok(&rest, keep.compress(attachment), simple) {
            return Some(Evidence::Diadem {
                added: x,
                attachment,
                pairs: lift_pairs(keep, pairs),
            });
        }
    }
    None
}

/// Two vertices adjacent to all others with an independent remainder.
/// Returns the pair and whether the two are adjacent.
pub fn join_pair(g: &Graph) -> Option<((usize, usize), bool)> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let all = g.vertices();
    for a in 0..n {
        for b in a + 1..n {
            let pair = VertexSet::singleton(a).with(b);
            let rest = all - pair;
            if !rest.is_subset(g.neighbors(a)) || !rest.is_subset(g.neighbors(b)) {
                continue;
            }
            if rest.iter().all(|v| (g.neighbors(v) & rest).is_empty()) {
                return Some(((a, b), g.has_edge(a, b)));
            }
        }
    }
    None
}

/// Labels a graph; precedence Corona, SimpleDiadem, Diadem, JoinK2,
/// JoinK2bar, Other.
pub fn classify_structure(g: &Graph) -> StructureLabel {
    if let Some(pairs) = corona_pairing(g) {
        return StructureLabel {
            kind: StructureKind::Corona,
            evidence: Some(Evidence::Corona { pairs }),
        };
    }
    if let Some(ev) = find_diadem(g, true) {
        return StructureLabel {
            kind: StructureKind::SimpleDiadem,
            evidence: Some(ev),
        };
    }
    if let Some(ev) = find_diadem(g, false) {
        return StructureLabel {
            kind: StructureKind::Diadem,
            evidence: Some(ev),
        };
    }
    if g.is_connected() {
        if let Some((pair, adjacent)) = join_pair(g) {
            let kind = if adjacent {
                StructureKind::JoinK2
            } else {
                StructureKind::JoinK2bar
            };
            return StructureLabel {
                kind,
                evidence: Some(Evidence::Join { pair }),
            };
        }
    }
    StructureLabel {
        kind: StructureKind::Other,
        evidence: None,
    }
}

/// Re-checks a label's evidence against the definitions.
pub fn verify_label(g: &Graph, label: &StructureLabel) -> bool {
    match (&label.kind, &label.evidence) {
        (StructureKind::Other, None) => true,
        (StructureKind::Corona, Some(Evidence::Corona { pairs })) => {
            verify_corona_pairing(g, pairs)
        }
        (
            kind @ (StructureKind::SimpleDiadem | StructureKind::Diadem),
            Some(Evidence::Diadem {
                added,
                attachment,
                pairs,
            }),
        ) => {
            if *added >= g.order() || g.neighbors(*added) != *attachment || !g.is_connected() {
                return false;
            }
            let keep = g.vertices().without(*added);
            let Ok(rest) = g.induced(keep) else {
                return false;
            };
            let local: Vec<_> = pairs
                .iter()
                .map(|&(c, l)| {
                    let c = keep.compress(VertexSet::singleton(c)).first();
                    let l = keep.compress(VertexSet::singleton(l)).first();
                    (c.unwrap_or(usize::MAX), l.unwrap_or(usize::MAX))
                })
                .collect();
            verify_corona_pairing(&rest, &local)
                && attachment_ok(
                    &rest,
                    keep.compress(*attachment),
                    *kind == StructureKind::SimpleDiadem,
                )
        }
        (
            kind @ (StructureKind::JoinK2 | StructureKind::JoinK2bar),
            Some(Evidence::Join { pair: (a, b) }),
        ) => {
            let (a, b) = (*a, *b);
            if a >= g.order() || b >= g.order() || a == b || g.order() < 3 {
                return false;
            }
            let rest = g.vertices() - VertexSet::singleton(a).with(b);
            rest.is_subset(g.neighbors(a))
                && rest.is_subset(g.neighbors(b))
                && rest.iter().all(|v| (g.neighbors(v) & rest).is_empty())
                && g.has_edge(a, b) == (*kind == StructureKind::JoinK2)
        }
        _ => false,
    }
}

/// Independence number `β₀(G)` by branch and bound.
pub fn max_independent_set_size(g: &Graph) -> usize {
    max_independent_set(g).len()
}

/// A maximum independent set.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let greedy = greedy_independent(g, g.vertices());
    let mut best = greedy;
    mis_branch(g, g.vertices(), VertexSet::EMPTY, &mut best);
    best
}

fn greedy_independent(g: &Graph, mut cand: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| (g.neighbors(v) & cand).len())
            .expect("non-empty");
        out.insert(v);
        cand -= g.closed(v);
    }
    out
}

fn mis_branch(g: &Graph, mut cand: VertexSet, mut current: VertexSet, best: &mut VertexSet) {
    // take every vertex with at most one candidate neighbor
    loop {
        let low = cand.iter().find(|&v| (g.neighbors(v) & cand).len() <= 1);
        match low {
            Some(v) => {
                current.insert(v);
                cand -= g.closed(v);
            }
            None => break,
        }
    }
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    if current.len() + cand.len() <= best.len() {
        return;
    }
    if current.len() + clique_cover_bound(g, cand) <= best.len() {
        return;
    }
    let v = cand
        .iter()
        .max_by_key(|&v| (g.neighbors(v) & cand).len())
        .expect("non-empty");
    mis_branch(g, cand - g.closed(v), current.with(v), best);
    mis_branch(g, cand.without(v), current, best);
}

/// Upper bound on the independence number of `G[cand]` from a greedy
/// partition into cliques.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut cliques = 0;
    while let Some(v) = cand.first() {
        let mut clique = VertexSet::singleton(v);
        let mut common = g.neighbors(v) & cand;
        while let Some(u) = common.first() {
            clique.insert(u);
            common &= g.neighbors(u);
        }
        cand -= clique;
        cliques += 1;
    }
    cliques
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn p4_is_corona() {
        let label = classify_structure(&path(4));
        assert_eq!(label.kind, StructureKind::Corona);
        assert!(verify_label(&path(4), &label));
        assert_eq!(
            label.evidence,
            Some(Evidence::Corona {
                pairs: alloc::vec![(1, 0), (2, 3)]
            })
        );
    }

    #[test]
    fn p3_is_join_k2bar() {
        let g = path(3);
        let label = classify_structure(&g);
        assert!(!is_corona(&g));
        assert_eq!(label.kind, StructureKind::JoinK2bar);
        assert!(verify_label(&g, &label));
    }

    #[test]
    fn c4_is_join_k2bar() {
        let label = classify_structure(&cycle(4));
        assert_eq!(label.kind, StructureKind::JoinK2bar);
        assert_eq!(label.evidence, Some(Evidence::Join { pair: (0, 2) }));
    }

    #[test]
    fn k3_and_k4_minus_edge_are_join_k2() {
        assert_eq!(classify_structure(&complete(3)).kind, StructureKind::JoinK2);
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(classify_structure(&g).kind, StructureKind::JoinK2);
    }

    #[test]
    fn k1_and_k2() {
        assert_eq!(classify_structure(&edgeless(1)).kind, StructureKind::Other);
        assert_eq!(classify_structure(&path(2)).kind, StructureKind::Corona);
        // disconnected union of coronas is a corona
        let g = Graph::from_edge_list(6, &[(0, 1), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(classify_structure(&g).kind, StructureKind::Corona);
    }

    #[test]
    fn diadems_from_p4() {
        // P4 = 0-1-2-3, new vertex 4 on support 1
        let simple = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let label = classify_structure(&simple);
        assert_eq!(label.kind, StructureKind::SimpleDiadem);
        assert!(verify_label(&simple, &label));
        // new vertex 4 on leaf 0 and support 1
        let diadem = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4)]).unwrap();
        let label = classify_structure(&diadem);
        assert_eq!(label.kind, StructureKind::Diadem);
        assert!(verify_label(&diadem, &label));
    }

    #[test]
    fn c5_is_other() {
        assert_eq!(classify_structure(&cycle(5)).kind, StructureKind::Other);
    }

    #[test]
    fn forged_evidence_is_rejected() {
        let g = cycle(4);
        let fake = StructureLabel {
            kind: StructureKind::JoinK2,
            evidence: Some(Evidence::Join { pair: (0, 2) }),
        };
        assert!(!verify_label(&g, &fake));
        let fake = StructureLabel {
            kind: StructureKind::Corona,
            evidence: Some(Evidence::Corona {
                pairs: alloc::vec![(0, 1), (2, 3)],
            }),
        };
        assert!(!verify_label(&g, &fake));
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(max_independent_set_size(&cycle(5)), 2);
        assert_eq!(max_independent_set_size(&complete(4)), 1);
        assert_eq!(max_independent_set_size(&path(6)), 3);
        assert_eq!(max_independent_set_size(&edgeless(7)), 7);
        assert_eq!(max_independent_set_size(&complete_bipartite(3, 5)), 5);
    }
}
