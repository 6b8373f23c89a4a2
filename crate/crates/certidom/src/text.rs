//! Plain-text formats: edge lists, partition families, 𝒫-corona dumps.
//!
//! Edge list: the order and edge count, then one `u v` pair per edge, all
//! whitespace separated (`"3 2\n0 1\n1 2"`). Lines starting with `#` are
//! comments.
//!
//! Partition family: one line per vertex, `v: {a,b}|{c}`; a vertex without
//! neighbors has an empty right-hand side (`v:`).

use std::fmt::Write as _;

use certidom_core::corona::{PCoronaGraph, PartitionFamily};
use certidom_core::{Graph, GraphError, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn strip_comments(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, TextError> {
    let mut tokens = Vec::new();
    for (_, line) in strip_comments(text) {
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| TextError::EdgeList(format!("not a vertex index: {tok:?}")))?;
            tokens.push(v);
        }
    }
    let (n, m) = match tokens[..] {
        [n, m, ..] => (n, m),
        _ => return Err(TextError::EdgeList("missing \"n m\" header".into())),
    };
    let rest = &tokens[2..];
    if rest.len() != 2 * m {
        return Err(TextError::EdgeList(format!(
            "header announces {m} edges, found {} numbers",
            rest.len()
        )));
    }
    let edges: Vec<(usize, usize)> = rest.chunks(2).map(|c| (c[0], c[1])).collect();
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_block(line: usize, text: &str) -> Result<VertexSet, TextError> {
    let err = |message: String| TextError::Syntax { line, message };
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| err(format!("block {text:?} is not of the form {{a,b}}")))?;
    let mut block = VertexSet::EMPTY;
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| err(format!("not a vertex index: {part:?}")))?;
        if v >= certidom_core::MAX_VERTICES {
            return Err(err(format!("vertex {v} out of range")));
        }
        block.insert(v);
    }
    Ok(block)
}

/// Parses a partition family for a graph of order `n`. Vertices without a
/// line get no blocks; validity against the graph is checked separately.
pub fn parse_partition_family(text: &str, n: usize) -> Result<PartitionFamily, TextError> {
    let mut blocks: Vec<Option<Vec<VertexSet>>> = vec![None; n];
    for (line, content) in strip_comments(text) {
        let err = |message: String| TextError::Syntax { line, message };
        let (head, tail) = content
            .split_once(':')
            .ok_or_else(|| err("expected \"v: {a,b}|{c}\"".into()))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| err(format!("not a vertex index: {head:?}")))?;
        if v >= n {
            return Err(err(format!("vertex {v} out of range for order {n}")));
        }
        if blocks[v].is_some() {
            return Err(err(format!("vertex {v} listed twice")));
        }
        let tail = tail.trim();
        let list = if tail.is_empty() {
            Vec::new()
        } else {
            tail.split('|')
                .map(|b| parse_block(line, b))
                .collect::<Result<_, _>>()?
        };
        blocks[v] = Some(list);
    }
    Ok(PartitionFamily::new(
        blocks.into_iter().map(Option::unwrap_or_default).collect(),
    ))
}

pub fn write_partition_family(p: &PartitionFamily) -> String {
    let mut out = String::new();
    for (v, blocks) in p.all_blocks().iter().enumerate() {
        let parts: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
        if parts.is_empty() {
            writeln!(out, "{v}:").unwrap();
        } else {
            writeln!(out, "{v}: {}", parts.join("|")).unwrap();
        }
    }
    out
}

/// Edge list followed by a `labels` section of `index -> label` lines.
pub fn write_p_corona(h: &PCoronaGraph) -> String {
    let mut out = write_edge_list(&h.graph);
    out.push_str("labels\n");
    for (i, label) in h.labels.iter().enumerate() {
        writeln!(out, "{i} -> {label}").unwrap();
    }
    out
}
