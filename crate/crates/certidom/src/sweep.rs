//! Theorem sweeps and invariant censuses over graph sources.
//!
//! Sources are processed in fixed-size chunks; each chunk is checked in
//! parallel and merged in source order, so reports do not depend on the
//! number of worker threads.

use std::collections::BTreeMap;

use certidom_core::corona::{random_family, random_refinement, PartitionFamily};
use certidom_core::enumerate::{enumerate_labeled_graphs, graph_from_mask, pair_count};
use certidom_core::families::FamilySpec;
use certidom_core::theorems::{
    check_family_theorem, check_theorem, lookup, ChainPattern, Chain, Outcome, Quadruple,
};
use certidom_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph6;
use crate::text::write_partition_family;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20240611;
/// Sampled `(G, 𝒫)` pairs per sweep unless configured otherwise.
pub const DEFAULT_SAMPLES: usize = 200;
const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Every labeled graph with `min_n <= n <= max_n` vertices.
    Enumerate {
        min_n: usize,
        max_n: usize,
        connected: bool,
        cap: usize,
    },
    /// One graph6 string per line; `name` is echoed in reports.
    Graph6 { name: String, text: String },
    /// Named family members.
    Families(Vec<FamilySpec>),
    /// Seeded uniform labeled graphs on `1..=max_n` vertices, each with a
    /// uniform partition family and a uniform refinement of it.
    Samples { count: usize, max_n: usize },
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub ids: Vec<String>,
    pub source: Source,
    pub seed: u64,
    pub jobs: usize,
    /// Graphs above this order are reported as errors instead of checked.
    pub max_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error(transparent)]
    Enumerate(#[from] certidom_core::enumerate::EnumerateError),
    #[error("invalid family: {0}")]
    Family(String),
    #[error("thread pool: {0}")]
    Pool(String),
}

/// One unit of work.
#[derive(Debug, Clone)]
struct Item {
    index: usize,
    graph: Graph,
    families: Option<(PartitionFamily, PartitionFamily)>,
}

/// Either a checkable item or an input problem, in source order.
enum Entry {
    Item(Item),
    Error(InputError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub theorems: Vec<String>,
    pub source: String,
    pub min_n: Option<usize>,
    pub max_n: Option<usize>,
    pub connected: bool,
    pub samples: Option<usize>,
    pub seed: u64,
    pub max_order: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    pub id: String,
    pub kind: String,
    pub checked: u64,
    pub passed: u64,
    pub skipped: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub theorem: String,
    pub graph6: String,
    pub n: usize,
    pub gamma: usize,
    pub upper_gamma: usize,
    pub gamma_cer: usize,
    pub upper_gamma_cer: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refinement: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub config: ConfigEcho,
    pub graphs: u64,
    pub theorems: Vec<Counters>,
    pub failures: Vec<Failure>,
    pub errors: Vec<InputError>,
}

impl SweepReport {
    pub fn total_failed(&self) -> u64 {
        self.theorems.iter().map(|c| c.failed).sum()
    }

    pub fn counters(&self, id: &str) -> Option<&Counters> {
        self.theorems.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn echo(config: &SweepConfig) -> ConfigEcho {
    let mut e = ConfigEcho {
        theorems: config.ids.clone(),
        source: String::new(),
        min_n: None,
        max_n: None,
        connected: false,
        samples: None,
        seed: config.seed,
        max_order: config.max_order,
    };
    match &config.source {
        Source::Enumerate {
            min_n,
            max_n,
            connected,
            ..
        } => {
            e.source = "enumerate".into();
            e.min_n = Some(*min_n);
            e.max_n = Some(*max_n);
            e.connected = *connected;
        }
        Source::Graph6 { name, .. } => e.source = format!("graph6:{name}"),
        Source::Families(specs) => {
            let names: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
            e.source = format!("families:{}", names.join(";"));
        }
        Source::Samples { count, max_n } => {
            e.source = "samples".into();
            e.min_n = Some(1);
            e.max_n = Some(*max_n);
            e.samples = Some(*count);
        }
    }
    e
}

/// Produces the source's entries in order, in chunks.
fn for_each_chunk(
    config: &SweepConfig,
    mut visit: impl FnMut(Vec<Entry>),
) -> Result<(), SweepError> {
    let mut chunk = Vec::with_capacity(CHUNK);
    let mut push = |e: Entry, chunk: &mut Vec<Entry>| {
        chunk.push(e);
        if chunk.len() == CHUNK {
            visit(std::mem::take(chunk));
        }
    };
    let mut index = 0;
    match &config.source {
        Source::Enumerate {
            min_n,
            max_n,
            connected,
            cap,
        } => {
            for n in *min_n..=*max_n {
                for (_, graph) in enumerate_labeled_graphs(n, *connected, *cap)? {
                    push(Entry::Item(Item { index, graph, families: None }), &mut chunk);
                    index += 1;
                }
            }
        }
        Source::Graph6 { text, .. } => {
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let entry = match graph6::parse(line) {
                    Ok(graph) => Entry::Item(Item { index, graph, families: None }),
                    Err(e) => Entry::Error(InputError {
                        line: i + 1,
                        message: e.to_string(),
                    }),
                };
                push(entry, &mut chunk);
                index += 1;
            }
        }
        Source::Families(specs) => {
            for spec in specs {
                let graph = spec
                    .build()
                    .map_err(|e| SweepError::Family(format!("{spec}: {e}")))?;
                push(Entry::Item(Item { index, graph, families: None }), &mut chunk);
                index += 1;
            }
        }
        Source::Samples { count, max_n } => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            for _ in 0..*count {
                let item = sample(&mut rng, *max_n, index);
                push(Entry::Item(item), &mut chunk);
                index += 1;
            }
        }
    }
    if !chunk.is_empty() {
        visit(chunk);
    }
    Ok(())
}

fn sample(rng: &mut ChaCha8Rng, max_n: usize, index: usize) -> Item {
    let n = rng.random_range(1..=max_n);
    let bits = pair_count(n);
    let mask = if bits == 0 {
        0
    } else {
        rng.random::<u64>() & (u64::MAX >> (64 - bits))
    };
    let graph = graph_from_mask(n, mask);
    let mut pick = |k: u64| rng.random_range(0..k);
    let p = random_family(&graph, &mut pick);
    let refined = random_refinement(&p, &mut pick);
    Item {
        index,
        graph,
        families: Some((p, refined)),
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, SweepError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))
}

fn validate_ids(ids: &[String]) -> Result<(), SweepError> {
    match ids.iter().find(|id| lookup(id).is_none()) {
        Some(id) => Err(SweepError::UnknownTheorem(id.clone())),
        None => Ok(()),
    }
}

fn too_large(item: &Item, max_order: usize) -> Option<InputError> {
    (item.graph.order() > max_order).then(|| InputError {
        line: item.index + 1,
        message: format!(
            "order {} exceeds the solver limit {max_order}; pass --force to check it",
            item.graph.order()
        ),
    })
}

struct ItemOutcome {
    outcomes: Vec<Outcome>,
    failures: Vec<Failure>,
    error: Option<InputError>,
}

fn check_item(ids: &[String], item: &Item, max_order: usize) -> ItemOutcome {
    if let Some(error) = too_large(item, max_order) {
        return ItemOutcome {
            outcomes: Vec::new(),
            failures: Vec::new(),
            error: Some(error),
        };
    }
    let mut outcomes = Vec::with_capacity(ids.len());
    let mut failures = Vec::new();
    let mut quad = None;
    for id in ids {
        let result = match &item.families {
            Some((p, q)) => check_family_theorem(id, &item.graph, p, q),
            None => check_theorem(id, &item.graph),
        };
        let (outcome, detail) = match result {
            Ok(r) => (r.outcome, r.detail),
            Err(e) => (Outcome::Fail, format!("error: {e}")),
        };
        if outcome == Outcome::Fail {
            let q = *quad.get_or_insert_with(|| Quadruple::of(&item.graph));
            failures.push(Failure {
                index: item.index,
                theorem: id.clone(),
                graph6: graph6::encode(&item.graph),
                n: item.graph.order(),
                gamma: q.gamma,
                upper_gamma: q.upper_gamma,
                gamma_cer: q.gamma_cer,
                upper_gamma_cer: q.upper_gamma_cer,
                detail,
                family: item.families.as_ref().map(|(p, _)| write_partition_family(p)),
                refinement: item.families.as_ref().map(|(_, q)| write_partition_family(q)),
            });
        }
        outcomes.push(outcome);
    }
    ItemOutcome {
        outcomes,
        failures,
        error: None,
    }
}

/// Runs every requested check over the source and aggregates the results.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    validate_ids(&config.ids)?;
    let pool = pool(config.jobs)?;
    let mut counters: Vec<Counters> = config
        .ids
        .iter()
        .map(|id| Counters {
            id: id.clone(),
            kind: lookup(id).expect("validated").kind.as_str().into(),
            ..Counters::default()
        })
        .collect();
    let mut failures = Vec::new();
    let mut errors = Vec::new();
    let mut graphs = 0u64;
    for_each_chunk(config, |chunk| {
        let results: Vec<Result<ItemOutcome, InputError>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|entry| match entry {
                    Entry::Item(item) => Ok(check_item(&config.ids, item, config.max_order)),
                    Entry::Error(e) => Err(e.clone()),
                })
                .collect()
        });
        for r in results {
            match r {
                Ok(ItemOutcome { error: Some(e), .. }) | Err(e) => errors.push(e),
                Ok(out) => {
                    graphs += 1;
                    for (c, o) in counters.iter_mut().zip(&out.outcomes) {
                        match o {
                            Outcome::Pass => c.passed += 1,
                            Outcome::Fail => c.failed += 1,
                            Outcome::Skipped => c.skipped += 1,
                        }
                    }
                    failures.extend(out.failures);
                }
            }
        }
    })?;
    for c in &mut counters {
        c.checked = c.passed + c.failed;
    }
    Ok(SweepReport {
        schema: 1,
        config: echo(config),
        graphs,
        theorems: counters,
        failures,
        errors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub gamma: usize,
    pub upper_gamma: usize,
    pub gamma_cer: usize,
    pub upper_gamma_cer: usize,
    pub count: u64,
    pub witness: String,
    pub chain: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainSummary {
    pub chain: String,
    /// Graphs where this chain holds and no other does.
    pub strict_count: u64,
    pub strict_witness: Option<String>,
    /// Graphs where this chain holds, possibly together with another.
    pub holding_count: u64,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub schema: u32,
    pub config: ConfigEcho,
    pub graphs: u64,
    pub rows: Vec<CensusRow>,
    pub chains: Vec<ChainSummary>,
    pub errors: Vec<InputError>,
}

impl CensusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Tab separated table, one tuple per line, then the chain summary as
    /// `#` comment lines.
    pub fn to_tsv(&self) -> String {
        let mut out =
            String::from("gamma\tupper_gamma\tgamma_cer\tupper_gamma_cer\tcount\twitness\tchain\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.gamma, r.upper_gamma, r.gamma_cer, r.upper_gamma_cer, r.count, r.witness, r.chain
            ));
        }
        for c in &self.chains {
            out.push_str(&format!("# {}: {}\n", c.chain, c.note));
        }
        out
    }
}

fn chain_holds(q: &Quadruple, chain: Chain) -> bool {
    let (g, gc, ugc) = (q.upper_gamma, q.gamma_cer, q.upper_gamma_cer);
    match chain {
        Chain::Chain1 => g <= gc,
        Chain::Chain2 => gc <= g && g <= ugc,
        Chain::Chain3 => ugc <= g,
    }
}

/// Tabulates `(γ, Γ, γ_cer, Γ_cer)` over the source. Theorem ids in the
/// config are ignored.
pub fn census(config: &SweepConfig) -> Result<CensusReport, SweepError> {
    let pool = pool(config.jobs)?;
    let mut table: BTreeMap<Quadruple, (u64, String)> = BTreeMap::new();
    let mut errors = Vec::new();
    let mut graphs = 0u64;
    let chains = [Chain::Chain1, Chain::Chain2, Chain::Chain3];
    let mut strict: Vec<(u64, Option<String>)> = vec![(0, None); 3];
    let mut holding = [0u64; 3];
    for_each_chunk(config, |chunk| {
        let results: Vec<Result<(Quadruple, String), InputError>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|entry| match entry {
                    Entry::Item(item) => match too_large(item, config.max_order) {
                        Some(e) => Err(e),
                        None => Ok((Quadruple::of(&item.graph), graph6::encode(&item.graph))),
                    },
                    Entry::Error(e) => Err(e.clone()),
                })
                .collect()
        });
        for r in results {
            match r {
                Err(e) => errors.push(e),
                Ok((q, g6)) => {
                    graphs += 1;
                    let pattern = ChainPattern::from_values(&q);
                    for (i, &c) in chains.iter().enumerate() {
                        if chain_holds(&q, c) {
                            holding[i] += 1;
                        }
                    }
                    if !pattern.degenerate {
                        let slot = &mut strict[pattern.chain as usize];
                        slot.0 += 1;
                        slot.1.get_or_insert_with(|| g6.clone());
                    }
                    table.entry(q).or_insert((0, g6)).0 += 1;
                }
            }
        }
    })?;
    let rows = table
        .into_iter()
        .map(|(q, (count, witness))| CensusRow {
            gamma: q.gamma,
            upper_gamma: q.upper_gamma,
            gamma_cer: q.gamma_cer,
            upper_gamma_cer: q.upper_gamma_cer,
            count,
            witness,
            chain: ChainPattern::from_values(&q).label(),
        })
        .collect();
    let chains = chains
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let (strict_count, strict_witness) = strict[i].clone();
            let note = match &strict_witness {
                Some(w) => format!("{strict_count} strict witnesses, first {w}"),
                None => "no strict witness in this source".to_string(),
            };
            ChainSummary {
                chain: c.as_str().into(),
                strict_count,
                strict_witness,
                holding_count: holding[i],
                note,
            }
        })
        .collect();
    Ok(CensusReport {
        schema: 1,
        config: echo(config),
        graphs,
        rows,
        chains,
        errors,
    })
}
