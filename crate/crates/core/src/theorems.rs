//! Registry of checkable statements about γ, γ_cer, Γ and Γ_cer.
//!
//! Each entry evaluates its hypothesis and conclusion on a concrete graph
//! (or graph plus partition family) with the exact solvers. Graphs outside
//! an entry's scope give [`Outcome::Skipped`]; a false hypothesis gives a
//! vacuous [`Outcome::Pass`].
//!
//! For `thm-2.6` the hypothesis "γ(G−v) ≥ γ(G) for every vertex v of any
//! γ-set" is read universally: over every γ-set and every member of it.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::corona::{
    all_families, equality_predicate, is_maximal_family, p_corona, CoronaError,
    PartitionFamily,
};
use crate::domination::{
    dominating_sets_of_size, first_dominating_set_of_size, gamma, gamma_cer,
    gamma_value, gamma_vertex_deleted_profile, has_certified_dominating_set_of_size,
    enumerate_minimal_sets, outside_degree, unique_gamma_set, upper_gamma, upper_gamma_cer,
    InvariantKind,
};
use crate::graph::Graph;
use crate::structure::{classify_structure, is_corona, max_independent_set_size};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremKind {
    Implication,
    Biconditional,
    Invariant,
}

impl TheoremKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremKind::Implication => "implication",
            TheoremKind::Biconditional => "biconditional",
            TheoremKind::Invariant => "invariant",
        }
    }
}

/// What a check consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Graph,
    /// A graph with a partition family (and a refinement of it).
    Family,
}

#[derive(Debug, Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub kind: TheoremKind,
    pub input: InputKind,
    /// Graphs on which the statement is evaluated; others are skipped.
    pub scope: &'static str,
    pub statement: &'static str,
    /// Affordable over every labeled graph on seven vertices.
    pub cheap: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub outcome: Outcome,
    /// Space separated `key=value` pairs with the computed values.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("unknown theorem id {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Corona(#[from] CoronaError),
}

const fn entry(
    id: &'static str,
    kind: TheoremKind,
    scope: &'static str,
    statement: &'static str,
    cheap: bool,
) -> TheoremCheck {
    TheoremCheck {
        id,
        kind,
        input: InputKind::Graph,
        scope,
        statement,
        cheap,
    }
}

const fn family_entry(
    id: &'static str,
    kind: TheoremKind,
    scope: &'static str,
    statement: &'static str,
) -> TheoremCheck {
    TheoremCheck {
        id,
        kind,
        input: InputKind::Family,
        scope,
        statement,
        cheap: false,
    }
}

use TheoremKind::{Biconditional, Implication, Invariant};

static REGISTRY: &[TheoremCheck] = &[
    entry(
        "thm-2.1",
        Biconditional,
        "connected, n >= 3",
        "γ = γ_cer iff some γ-set has every member with >= 2 outside neighbors",
        true,
    ),
    entry(
        "cor-2.2",
        Implication,
        "connected, n >= 3",
        "an independent γ-set without leaves implies γ = γ_cer",
        false,
    ),
    entry(
        "cor-2.3",
        Implication,
        "all graphs",
        "δ >= 2 implies a γ-set with >= 2 outside neighbors per member, and γ = γ_cer",
        true,
    ),
    entry(
        "cor-2.4",
        Implication,
        "all graphs",
        "a unique γ-set implies γ = γ_cer",
        false,
    ),
    entry(
        "cor-2.5",
        Implication,
        "n >= 2",
        "a γ-set D with γ(G-x) > γ for all x in D implies γ = γ_cer",
        false,
    ),
    entry(
        "thm-2.6",
        Implication,
        "connected, n >= 3",
        "γ(G-v) >= γ for every member v of every γ-set implies γ = γ_cer",
        false,
    ),
    entry(
        "thm-2.7",
        Implication,
        "connected",
        "P4-free and not K2 implies γ = γ_cer",
        false,
    ),
    entry(
        "cor-2.8",
        Biconditional,
        "all graphs",
        "γ(H) = γ_cer(H) for every connected induced H other than K2 iff P4-free",
        false,
    ),
    entry(
        "lem-2.9",
        Implication,
        "connected, n >= 3",
        "γ = γ_cer implies every γ_cer-set avoids the leaves and contains the supports",
        false,
    ),
    family_entry(
        "lem-2.10",
        Invariant,
        "all (G, 𝒫)",
        "γ(G∘𝒫) = |V_G|",
    ),
    family_entry(
        "thm-2.11",
        Biconditional,
        "G without isolated vertices",
        "γ(G∘𝒫) = γ_cer(G∘𝒫) iff {u : |𝒫(u)| >= 2} dominates G",
    ),
    entry(
        "cor-corona-strict",
        Invariant,
        "all graphs",
        "γ(G∘K1) < γ_cer(G∘K1)",
        false,
    ),
    entry(
        "cor-2subdivision",
        Implication,
        "all graphs",
        "no K2 component implies γ(S2(G)) = γ_cer(S2(G))",
        false,
    ),
    entry(
        "thm-maximal-family",
        Biconditional,
        "n <= 4, Δ <= 3, every partition family",
        "𝒫 is maximal for the equality iff |𝒫(v)| <= 2 and {v : |𝒫(v)| = 2} is minimal dominating",
        false,
    ),
    entry(
        "lem-3.1",
        Invariant,
        "connected, n >= 2",
        "for every minimal certified dominating D, {v in D : N[v] ⊆ D} lies in L ∪ S¹ and induces a corona or is empty",
        false,
    ),
    entry(
        "thm-3.2",
        Biconditional,
        "all graphs",
        "non-trivial components are coronas iff γ_cer = n iff Γ_cer = n",
        true,
    ),
    entry(
        "thm-3.3",
        Biconditional,
        "connected, n >= 3",
        "Γ_cer = n-2 iff simple diadem, diadem, K2 + K̄(n-2) or K̄2 + K̄(n-2)",
        false,
    ),
    entry(
        "gap-law",
        Invariant,
        "all graphs",
        "Γ_cer != n-1",
        true,
    ),
    entry(
        "lem-3.4",
        Implication,
        "all graphs",
        "δ >= 2 implies Γ_cer <= Γ",
        true,
    ),
    entry(
        "thm-3.5",
        Implication,
        "connected",
        "δ >= 2 and an independent Γ-set imply Γ = Γ_cer",
        false,
    ),
    entry(
        "cor-3.6",
        Implication,
        "all graphs",
        "δ >= 2 and β0 = Γ imply Γ = Γ_cer",
        false,
    ),
    entry(
        "sandwich",
        Invariant,
        "all graphs",
        "γ <= γ_cer <= Γ_cer and γ <= Γ",
        true,
    ),
    family_entry(
        "refinement-monotone",
        Implication,
        "all (G, 𝒫, 𝒫') with 𝒫' a refinement of 𝒫",
        "γ(G∘𝒫) = γ_cer(G∘𝒫) implies γ(G∘𝒫') = γ_cer(G∘𝒫')",
    ),
];

pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

pub fn ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|t| t.id)
}

pub fn lookup(id: &str) -> Option<&'static TheoremCheck> {
    REGISTRY.iter().find(|t| t.id == id)
}

/// Above this many partition families a graph-only check of a family
/// statement uses just the trivial and all-singleton families.
pub const EXHAUSTIVE_FAMILY_LIMIT: u64 = 64;

/// Evaluates `id` on `g`. Family statements run over every partition
/// family of `g` when there are at most [`EXHAUSTIVE_FAMILY_LIMIT`], and
/// over the trivial and all-singleton families otherwise.
pub fn check_theorem(id: &str, g: &Graph) -> Result<CheckResult, TheoremError> {
    let check = lookup(id).ok_or_else(|| TheoremError::Unknown(id.to_string()))?;
    Ok(match check.id {
        "thm-2.1" => thm_2_1(g),
        "cor-2.2" => cor_2_2(g),
        "cor-2.3" => cor_2_3(g),
        "cor-2.4" => cor_2_4(g),
        "cor-2.5" => cor_2_5(g),
        "thm-2.6" => thm_2_6(g),
        "thm-2.7" => thm_2_7(g),
        "cor-2.8" => cor_2_8(g),
        "lem-2.9" => lem_2_9(g),
        "cor-corona-strict" => cor_corona_strict(g),
        "cor-2subdivision" => cor_2subdivision(g),
        "thm-maximal-family" => thm_maximal_family(g)?,
        "lem-3.1" => lem_3_1(g),
        "thm-3.2" => thm_3_2(g),
        "thm-3.3" => thm_3_3(g),
        "gap-law" => gap_law(g),
        "lem-3.4" => lem_3_4(g),
        "thm-3.5" => thm_3_5(g),
        "cor-3.6" => cor_3_6(g),
        "sandwich" => sandwich(g),
        family_id => family_over_defaults(family_id, g)?,
    })
}

/// Evaluates a family statement on one `(G, 𝒫)`; `refined` must be a
/// refinement of `p` and is only read by `refinement-monotone`.
/// Graph statements ignore the families and run on `g`.
pub fn check_family_theorem(
    id: &str,
    g: &Graph,
    p: &PartitionFamily,
    refined: &PartitionFamily,
) -> Result<CheckResult, TheoremError> {
    let check = lookup(id).ok_or_else(|| TheoremError::Unknown(id.to_string()))?;
    match check.id {
        "lem-2.10" => lem_2_10(g, p),
        "thm-2.11" => thm_2_11(g, p),
        "refinement-monotone" => refinement_monotone(g, p, refined),
        _ => check_theorem(id, g),
    }
}

fn pass_if(ok: bool, detail: String) -> CheckResult {
    CheckResult {
        outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        detail,
    }
}

fn implication(hyp: bool, concl: bool, detail: String) -> CheckResult {
    pass_if(!hyp || concl, format!("hypothesis={hyp} conclusion={concl} {detail}"))
}

fn biconditional(lhs: bool, rhs: bool, detail: String) -> CheckResult {
    pass_if(lhs == rhs, format!("lhs={lhs} rhs={rhs} {detail}"))
}

fn skipped(reason: &str) -> CheckResult {
    CheckResult {
        outcome: Outcome::Skipped,
        detail: format!("out of scope: {reason}"),
    }
}

fn connected_at_least(g: &Graph, n: usize) -> Option<CheckResult> {
    if g.order() < n {
        Some(skipped("order too small"))
    } else if !g.is_connected() {
        Some(skipped("disconnected"))
    } else {
        None
    }
}

/// `(γ, γ = γ_cer)` via a size-γ certified search.
fn gamma_equality(h: &Graph) -> (usize, bool) {
    let k = gamma_value(h);
    (k, has_certified_dominating_set_of_size(h, k))
}

fn gamma_set_two_outside(g: &Graph, k: usize) -> Option<VertexSet> {
    first_dominating_set_of_size(g, k, |s| s.iter().all(|v| outside_degree(g, v, s) >= 2))
}

fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

fn thm_2_1(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 3) {
        return r;
    }
    let (k, equal) = gamma_equality(g);
    let witness = gamma_set_two_outside(g, k);
    let w = witness.map_or_else(|| "none".to_string(), |w| w.to_string());
    biconditional(witness.is_some(), equal, format!("gamma={k} equal={equal} witness={w}"))
}

fn cor_2_2(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 3) {
        return r;
    }
    let (k, equal) = gamma_equality(g);
    let leaves = g.leaves();
    let hyp = first_dominating_set_of_size(g, k, |s| {
        is_independent(g, s) && !s.intersects(leaves)
    });
    implication(hyp.is_some(), equal, format!("gamma={k}"))
}

fn cor_2_3(g: &Graph) -> CheckResult {
    let hyp = g.order() > 0 && g.min_degree() >= 2;
    if !hyp {
        return implication(false, true, format!("delta={}", g.min_degree()));
    }
    let (k, equal) = gamma_equality(g);
    let witness = gamma_set_two_outside(g, k);
    implication(
        hyp,
        equal && witness.is_some(),
        format!("gamma={k} equal={equal} two_outside={}", witness.is_some()),
    )
}

fn cor_2_4(g: &Graph) -> CheckResult {
    let unique = unique_gamma_set(g);
    let (k, equal) = gamma_equality(g);
    implication(unique.is_some(), equal, format!("gamma={k}"))
}

fn cor_2_5(g: &Graph) -> CheckResult {
    let Ok(profile) = gamma_vertex_deleted_profile(g) else {
        return skipped("order too small");
    };
    let (k, equal) = gamma_equality(g);
    let hyp = first_dominating_set_of_size(g, k, |s| s.iter().all(|x| profile[x] > k));
    implication(hyp.is_some(), equal, format!("gamma={k} profile={profile:?}"))
}

fn thm_2_6(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 3) {
        return r;
    }
    let profile = gamma_vertex_deleted_profile(g).expect("order checked");
    let (k, equal) = gamma_equality(g);
    let members = dominating_sets_of_size(g, k, |_| true)
        .into_iter()
        .fold(VertexSet::EMPTY, |acc, s| acc | s);
    let hyp = members.iter().all(|v| profile[v] >= k);
    implication(hyp, equal, format!("gamma={k} profile={profile:?} members={members}"))
}

fn thm_2_7(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 1) {
        return r;
    }
    let p4_free = g.is_p4_free();
    let is_k2 = g.order() == 2;
    let hyp = p4_free && !is_k2;
    let (k, equal) = gamma_equality(g);
    implication(hyp, equal, format!("gamma={k} p4_free={p4_free}"))
}

fn cor_2_8(g: &Graph) -> CheckResult {
    let n = g.order();
    let mut all_equal = true;
    let mut bad = None;
    for bits in 1u64..1 << n {
        let s = VertexSet::from_bits(bits);
        if s.len() == 2 && g.has_edge(s.first().unwrap(), s.last().unwrap()) {
            continue;
        }
        if !g.is_connected_within(s) {
            continue;
        }
        let h = g.induced(s).expect("subset of vertices");
        if !gamma_equality(&h).1 {
            all_equal = false;
            bad = Some(s);
            break;
        }
    }
    let p4_free = g.is_p4_free();
    let bad = bad.map_or_else(|| "none".to_string(), |s| s.to_string());
    biconditional(all_equal, p4_free, format!("unequal_induced={bad}"))
}

fn lem_2_9(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 3) {
        return r;
    }
    let (k, equal) = gamma_equality(g);
    if !equal {
        return implication(false, true, format!("gamma={k}"));
    }
    let report = g.leaf_support_report();
    let sets = dominating_sets_of_size(g, k, |s| InvariantKind::GammaCer.accepts(g, s));
    let bad = sets
        .iter()
        .find(|s| s.intersects(report.leaves) || !report.supports.is_subset(**s));
    let detail = format!(
        "gamma={k} gamma_cer_sets={} offending={}",
        sets.len(),
        bad.map_or_else(|| "none".to_string(), |s| s.to_string())
    );
    implication(true, bad.is_none(), detail)
}

fn lem_2_10(g: &Graph, p: &PartitionFamily) -> Result<CheckResult, TheoremError> {
    let h = p_corona(g, p)?;
    let k = gamma_value(&h.graph);
    Ok(pass_if(
        k == g.order(),
        format!("gamma={k} base_order={} corona_order={}", g.order(), h.order()),
    ))
}

fn thm_2_11(g: &Graph, p: &PartitionFamily) -> Result<CheckResult, TheoremError> {
    if !g.isolated().is_empty() {
        return Ok(skipped("isolated vertex"));
    }
    let predicate = equality_predicate(g, p)?;
    let h = p_corona(g, p)?;
    let (k, equal) = gamma_equality(&h.graph);
    Ok(biconditional(
        equal,
        predicate,
        format!("gamma={k} split={}", p.split_vertices()),
    ))
}

fn refinement_monotone(
    g: &Graph,
    p: &PartitionFamily,
    refined: &PartitionFamily,
) -> Result<CheckResult, TheoremError> {
    p.validate(g)?;
    refined.validate(g)?;
    if !refined.is_refinement_of(p)? {
        return Ok(skipped("second family is not a refinement"));
    }
    let (k, hyp) = gamma_equality(&p_corona(g, p)?.graph);
    if !hyp {
        return Ok(implication(false, true, format!("gamma={k}")));
    }
    let (k2, concl) = gamma_equality(&p_corona(g, refined)?.graph);
    Ok(implication(hyp, concl, format!("gamma={k} refined_gamma={k2}")))
}

fn family_count(g: &Graph) -> u64 {
    const BELL: [u64; 8] = [1, 1, 2, 5, 15, 52, 203, 877];
    (0..g.order()).fold(1u64, |acc, v| {
        let b = BELL.get(g.degree(v)).copied().unwrap_or(u64::MAX);
        acc.saturating_mul(b)
    })
}

fn default_families(g: &Graph) -> Vec<PartitionFamily> {
    if family_count(g) <= EXHAUSTIVE_FAMILY_LIMIT {
        all_families(g)
    } else {
        alloc::vec![PartitionFamily::trivial(g), PartitionFamily::singletons(g)]
    }
}

fn family_over_defaults(id: &str, g: &Graph) -> Result<CheckResult, TheoremError> {
    let families = default_families(g);
    let mut any_checked = false;
    let mut first_pass = None;
    let mut run = |r: CheckResult| -> Option<CheckResult> {
        match r.outcome {
            Outcome::Fail => Some(r),
            Outcome::Pass => {
                any_checked = true;
                first_pass.get_or_insert(r);
                None
            }
            Outcome::Skipped => None,
        }
    };
    for p in &families {
        if id == "refinement-monotone" {
            for q in &families {
                if q.is_refinement_of(p)? {
                    let r = refinement_monotone(g, p, q)?;
                    if let Some(fail) = run(r) {
                        return Ok(fail);
                    }
                }
            }
        } else {
            let r = check_family_theorem(id, g, p, p)?;
            if let Some(fail) = run(r) {
                return Ok(fail);
            }
        }
    }
    if any_checked {
        let r = first_pass.expect("a pass was recorded");
        Ok(CheckResult {
            outcome: Outcome::Pass,
            detail: format!("families={} {}", families.len(), r.detail),
        })
    } else {
        Ok(skipped("no family in scope"))
    }
}

fn thm_maximal_family(g: &Graph) -> Result<CheckResult, TheoremError> {
    if g.order() > 4 {
        return Ok(skipped("order above 4"));
    }
    if g.max_degree() > 3 {
        return Ok(skipped("max degree above 3"));
    }
    let families = all_families(g);
    let equal: Vec<bool> = families
        .iter()
        .map(|p| equality_predicate(g, p))
        .collect::<Result<_, _>>()?;
    for (i, p) in families.iter().enumerate() {
        let lhs = is_maximal_family(g, p)?.maximal;
        let mut rhs = equal[i];
        if rhs {
            for (j, q) in families.iter().enumerate() {
                if j != i && equal[j] && p.is_refinement_of(q)? {
                    rhs = false;
                    break;
                }
            }
        }
        if lhs != rhs {
            return Ok(biconditional(lhs, rhs, format!("family_index={i}")));
        }
    }
    Ok(pass_if(true, format!("families={}", families.len())))
}

fn cor_corona_strict(g: &Graph) -> CheckResult {
    let h = crate::corona::corona_k1(g).expect("trivial family is valid");
    let (k, equal) = gamma_equality(&h.graph);
    pass_if(!equal, format!("gamma={k} corona_order={}", h.order()))
}

fn cor_2subdivision(g: &Graph) -> CheckResult {
    let has_k2 = g
        .components()
        .iter()
        .any(|c| c.graph.order() == 2);
    if has_k2 {
        return implication(false, true, "k2_component=true".to_string());
    }
    let h = crate::corona::two_subdivision(g).expect("singleton family is valid");
    let (k, equal) = gamma_equality(&h.graph);
    implication(true, equal, format!("gamma={k} subdivision_order={}", h.order()))
}

fn lem_3_1(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 2) {
        return r;
    }
    let report = g.leaf_support_report();
    let allowed = report.leaves | report.weak_supports;
    let mut sets = 0usize;
    for d in enumerate_minimal_sets(g, true) {
        sets += 1;
        let enclosed: VertexSet = d.iter().filter(|&v| g.closed(v).is_subset(d)).collect();
        let placed = enclosed.is_subset(allowed);
        let corona = enclosed.is_empty() || is_corona(&g.induced(enclosed).expect("subset"));
        if !placed || !corona {
            return pass_if(
                false,
                format!("set={d} enclosed={enclosed} in_leaves_or_weak={placed} corona={corona}"),
            );
        }
    }
    pass_if(true, format!("minimal_certified_sets={sets}"))
}

fn thm_3_2(g: &Graph) -> CheckResult {
    let n = g.order();
    let coronas = g
        .components()
        .iter()
        .all(|c| c.graph.order() == 1 || is_corona(&c.graph));
    let gc = gamma_cer(g).value;
    let ugc = upper_gamma_cer(g).value;
    let (b, c) = (gc == n, ugc == n);
    pass_if(
        coronas == b && b == c,
        format!("coronas={coronas} gamma_cer={gc} upper_gamma_cer={ugc} n={n}"),
    )
}

fn thm_3_3(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 3) {
        return r;
    }
    let n = g.order();
    let ugc = upper_gamma_cer(g).value;
    let label = classify_structure(g).kind;
    biconditional(
        ugc + 2 == n,
        label.is_near_full(),
        format!("upper_gamma_cer={ugc} n={n} label={}", label.as_str()),
    )
}

fn gap_law(g: &Graph) -> CheckResult {
    let n = g.order();
    let ugc = upper_gamma_cer(g).value;
    pass_if(n < 2 || ugc + 1 != n, format!("upper_gamma_cer={ugc} n={n}"))
}

fn leafless(g: &Graph) -> bool {
    g.order() > 0 && g.min_degree() >= 2
}

fn lem_3_4(g: &Graph) -> CheckResult {
    if !leafless(g) {
        return implication(false, true, format!("delta={}", g.min_degree()));
    }
    let ug = upper_gamma(g).value;
    let ugc = upper_gamma_cer(g).value;
    implication(true, ugc <= ug, format!("upper_gamma={ug} upper_gamma_cer={ugc}"))
}

fn thm_3_5(g: &Graph) -> CheckResult {
    if let Some(r) = connected_at_least(g, 1) {
        return r;
    }
    if !leafless(g) {
        return implication(false, true, format!("delta={}", g.min_degree()));
    }
    let ug = upper_gamma(g).value;
    let independent = first_dominating_set_of_size(g, ug, |s| {
        is_independent(g, s) && InvariantKind::UpperGamma.accepts(g, s)
    });
    let ugc = upper_gamma_cer(g).value;
    implication(
        independent.is_some(),
        ug == ugc,
        format!("upper_gamma={ug} upper_gamma_cer={ugc}"),
    )
}

fn cor_3_6(g: &Graph) -> CheckResult {
    if !leafless(g) {
        return implication(false, true, format!("delta={}", g.min_degree()));
    }
    let beta = max_independent_set_size(g);
    let ug = upper_gamma(g).value;
    let ugc = upper_gamma_cer(g).value;
    implication(
        beta == ug,
        ug == ugc,
        format!("beta0={beta} upper_gamma={ug} upper_gamma_cer={ugc}"),
    )
}

fn sandwich(g: &Graph) -> CheckResult {
    let q = Quadruple::of(g);
    pass_if(
        q.gamma <= q.gamma_cer && q.gamma_cer <= q.upper_gamma_cer && q.gamma <= q.upper_gamma,
        q.to_string(),
    )
}

/// The four invariants of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadruple {
    pub gamma: usize,
    pub upper_gamma: usize,
    pub gamma_cer: usize,
    pub upper_gamma_cer: usize,
}

impl Quadruple {
    pub fn of(g: &Graph) -> Self {
        Quadruple {
            gamma: gamma(g).value,
            upper_gamma: upper_gamma(g).value,
            gamma_cer: gamma_cer(g).value,
            upper_gamma_cer: upper_gamma_cer(g).value,
        }
    }
}

impl core::fmt::Display for Quadruple {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "gamma={} upper_gamma={} gamma_cer={} upper_gamma_cer={}",
            self.gamma, self.upper_gamma, self.gamma_cer, self.upper_gamma_cer
        )
    }
}

/// The three orderings of Γ against γ_cer ≤ Γ_cer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chain {
    /// γ ≤ Γ ≤ γ_cer ≤ Γ_cer
    Chain1,
    /// γ ≤ γ_cer ≤ Γ ≤ Γ_cer
    Chain2,
    /// γ ≤ γ_cer ≤ Γ_cer ≤ Γ
    Chain3,
}

impl Chain {
    pub fn as_str(self) -> &'static str {
        match self {
            Chain::Chain1 => "chain1",
            Chain::Chain2 => "chain2",
            Chain::Chain3 => "chain3",
        }
    }
}

/// The lowest-numbered chain that holds, and whether another one holds too.
/// A non-degenerate pattern has a strict inequality separating it from the
/// other two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainPattern {
    pub chain: Chain,
    pub degenerate: bool,
}

impl ChainPattern {
    pub fn from_values(q: &Quadruple) -> Self {
        let (g, gc, ugc) = (q.upper_gamma, q.gamma_cer, q.upper_gamma_cer);
        let holds = [g <= gc, gc <= g && g <= ugc, ugc <= g];
        let first = holds.iter().position(|&h| h).expect("γ_cer <= Γ_cer");
        let chain = [Chain::Chain1, Chain::Chain2, Chain::Chain3][first];
        ChainPattern {
            chain,
            degenerate: holds.iter().filter(|&&h| h).count() > 1,
        }
    }

    pub fn label(&self) -> String {
        if self.degenerate {
            format!("{}-degenerate", self.chain.as_str())
        } else {
            self.chain.as_str().to_string()
        }
    }
}

pub fn chain_pattern(g: &Graph) -> ChainPattern {
    ChainPattern::from_values(&Quadruple::of(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn outcome(id: &str, g: &Graph) -> Outcome {
        check_theorem(id, g).unwrap().outcome
    }

    #[test]
    fn registry_has_unique_ids() {
        let mut ids: Vec<_> = ids().collect();
        let len = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), len);
        assert!(matches!(
            check_theorem("nonsense", &path(3)),
            Err(TheoremError::Unknown(_))
        ));
    }

    #[test]
    fn spec_examples() {
        assert_eq!(outcome("thm-2.7", &path(4)), Outcome::Pass);
        assert_eq!(outcome("cor-2.3", &cycle(5)), Outcome::Pass);
        assert_eq!(outcome("thm-2.1", &path(2)), Outcome::Skipped);
        assert_eq!(outcome("thm-3.3", &edgeless(3)), Outcome::Skipped);
    }

    #[test]
    fn everything_passes_on_small_named_graphs() {
        let graphs = [
            path(1),
            path(2),
            path(3),
            path(4),
            cycle(4),
            cycle(5),
            complete(4),
            star(3),
            complete_bipartite(2, 2),
            edgeless(3),
        ];
        for g in &graphs {
            for id in ids() {
                let r = check_theorem(id, g).unwrap();
                assert_ne!(r.outcome, Outcome::Fail, "{id} on {g:?}: {}", r.detail);
            }
        }
    }

    #[test]
    fn chains() {
        let p4 = chain_pattern(&path(4));
        assert_eq!(p4, ChainPattern { chain: Chain::Chain1, degenerate: false });
        let k1 = chain_pattern(&complete(1));
        assert_eq!(k1, ChainPattern { chain: Chain::Chain1, degenerate: true });
        // Γ = Γ_cer = 3 > γ_cer = 2: chains 2 and 3 both hold
        let c6 = chain_pattern(&cycle(6));
        assert_eq!(c6, ChainPattern { chain: Chain::Chain2, degenerate: true });
        assert_eq!(c6.label(), "chain2-degenerate");
    }
}
