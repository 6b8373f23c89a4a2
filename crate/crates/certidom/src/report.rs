//! JSON views of single-graph results.

use certidom_core::domination::{solve, SolverLimits};
use certidom_core::structure::{classify_structure, Evidence};
use certidom_core::{Graph, InvariantKind, InvariantResult};
use serde::Serialize;

use crate::graph6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantJson {
    pub kind: &'static str,
    pub value: usize,
    pub witness: Vec<usize>,
    pub n: usize,
}

impl From<&InvariantResult> for InvariantJson {
    fn from(r: &InvariantResult) -> Self {
        InvariantJson {
            kind: r.kind.as_str(),
            value: r.value,
            witness: r.witness.to_vec(),
            n: r.n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComputeReport {
    pub schema: u32,
    pub graph6: String,
    pub n: usize,
    pub results: Vec<InvariantJson>,
}

/// The first requested invariant whose solver limit is below the order.
pub fn limit_violation(
    g: &Graph,
    kinds: &[InvariantKind],
    limits: &SolverLimits,
) -> Option<InvariantKind> {
    kinds
        .iter()
        .copied()
        .find(|&k| !limits.allows(k, g.order()))
}

pub fn compute(g: &Graph, kinds: &[InvariantKind]) -> ComputeReport {
    ComputeReport {
        schema: 1,
        graph6: graph6::encode(g),
        n: g.order(),
        results: kinds.iter().map(|&k| (&solve(g, k)).into()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum EvidenceJson {
    Corona {
        pairs: Vec<(usize, usize)>,
    },
    Diadem {
        added: usize,
        attachment: Vec<usize>,
        pairs: Vec<(usize, usize)>,
    },
    Join {
        pair: (usize, usize),
    },
}

impl From<&Evidence> for EvidenceJson {
    fn from(e: &Evidence) -> Self {
        match e {
            Evidence::Corona { pairs } => EvidenceJson::Corona {
                pairs: pairs.clone(),
            },
            Evidence::Diadem {
                added,
                attachment,
                pairs,
            } => EvidenceJson::Diadem {
                added: *added,
                attachment: attachment.to_vec(),
                pairs: pairs.clone(),
            },
            Evidence::Join { pair } => EvidenceJson::Join { pair: *pair },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub graph6: String,
    pub n: usize,
    pub label: &'static str,
    pub evidence: Option<EvidenceJson>,
    pub p4_free: bool,
    pub connected: bool,
    pub min_degree: usize,
    pub leaves: Vec<usize>,
    pub supports: Vec<usize>,
    pub weak_supports: Vec<usize>,
    pub strong_supports: Vec<usize>,
}

pub fn classify(g: &Graph) -> ClassifyReport {
    let label = classify_structure(g);
    let ls = g.leaf_support_report();
    ClassifyReport {
        schema: 1,
        graph6: graph6::encode(g),
        n: g.order(),
        label: label.kind.as_str(),
        evidence: label.evidence.as_ref().map(Into::into),
        p4_free: g.is_p4_free(),
        connected: g.is_connected(),
        min_degree: g.min_degree(),
        leaves: ls.leaves.to_vec(),
        supports: ls.supports.to_vec(),
        weak_supports: ls.weak_supports.to_vec(),
        strong_supports: ls.strong_supports.to_vec(),
    }
}
