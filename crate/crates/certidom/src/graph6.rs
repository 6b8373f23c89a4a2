//! graph6 encoding (nauty's `formats.txt`), limited to 64 vertices.

use certidom_core::{Graph, VertexSet, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 range")]
    BadByte { pos: usize, byte: u8 },
    #[error("truncated: expected {expected} bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("order {0} is above the supported maximum of 64")]
    TooLarge(usize),
    #[error("order 0 is not supported")]
    ZeroOrder,
}

const HEADER: &str = ">>graph6<<";

fn check_byte(pos: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::BadByte { pos, byte })
    }
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse(line: &str) -> Result<Graph, Graph6Error> {
    let s = line.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, body_start) = if bytes[0] != 126 {
        (check_byte(0, bytes[0])? as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            // 8-byte form, only for n >= 258048
            return Err(Graph6Error::TooLarge(258_048));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Length {
                expected: 4,
                found: bytes.len(),
            });
        }
        let mut n = 0usize;
        for (pos, &b) in bytes.iter().enumerate().take(4).skip(1) {
            n = n << 6 | check_byte(pos, b)? as usize;
        }
        (n, 4)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * (n - 1) / 2;
    let expected = body_start + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: bytes.len(),
        });
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let pos = body_start + k / 6;
            let chunk = check_byte(pos, bytes[pos])?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    for (pos, &b) in bytes.iter().enumerate().skip(body_start) {
        check_byte(pos, b)?;
    }
    Ok(Graph::from_adjacency(adj).expect("graph6 bodies encode simple graphs"))
}

/// Encodes `g` without header or newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
