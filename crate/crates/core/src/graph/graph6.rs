//! The graph6 text encoding.
//!
//! Layout: a size field `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),...`, packed
//! six bits per byte (most significant first) and offset by 63.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::Graph;

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;
const MAX_ORDER: usize = (1 << 36) - 1;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u8> {
    match bytes.get(pos) {
        None => Err(parse_err(pos, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(parse_err(pos, format!("byte {b:#04x} outside 63..=126"))),
    }
}

fn read_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| parse_err(0, "empty input"))?;
    if first != 126 {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    let (start, count) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let mut n = 0usize;
    for i in 0..count {
        n = (n << 6) | sextet(bytes, start + i)? as usize;
    }
    let minimum = if count == 3 { 63 } else { 258_048 };
    if n < minimum {
        return Err(parse_err(0, format!("non-minimal size field for n={n}")));
    }
    Ok((n, start + count))
}

/// Parses one graph6 string. An optional `>>graph6<<` header and a single
/// trailing line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text
        .strip_suffix("\r\n")
        .or_else(|| text.strip_suffix('\n'))
        .unwrap_or(text);
    let (body, base) = match body.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (body, 0),
    };
    parse_bytes(body.as_bytes()).map_err(|e| match e {
        Error::Parse { offset, reason } => parse_err(offset + base, reason),
        other => other,
    })
}

fn parse_bytes(bytes: &[u8]) -> Result<Graph> {
    let (n, mut pos) = read_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    if bytes.len() < pos + data_len {
        return Err(parse_err(bytes.len(), "unexpected end of input"));
    }
    if bytes.len() > pos + data_len {
        return Err(parse_err(pos + data_len, "trailing bytes"));
    }
    let mut adj = vec![BitSet::new(n); n];
    let (mut i, mut j) = (0usize, 1usize);
    let mut k = 0;
    while k < bits {
        let chunk = sextet(bytes, pos)?;
        for shift in (0..6).rev() {
            let bit = chunk >> shift & 1 == 1;
            if k < bits {
                if bit {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if bit {
                return Err(parse_err(pos, "nonzero padding bits"));
            }
            k += 1;
        }
        pos += 1;
    }
    Ok(Graph::from_adjacency(adj))
}

/// Parses a newline-separated list of graph6 strings, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.is_empty() {
            let g = parse_graph6(trimmed).map_err(|e| match e {
                Error::Parse { offset: o, reason } => parse_err(offset + o, reason),
                other => other,
            })?;
            out.push(g);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Headerless graph6 encoding of `g`.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 supports at most 2^36 - 1 vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        let count = if n <= 258_047 {
            out.push(126);
            3
        } else {
            out.extend([126, 126]);
            6
        };
        for i in (0..count).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
