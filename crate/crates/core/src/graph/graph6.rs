//! The graph6 format: a size header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte
//! (each byte offset by 63).

use super::SimpleGraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match body.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (body.as_bytes(), 0),
    };
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(
            base + pos,
            format!("byte 0x{:02x} is outside the graph6 range 63..=126", bytes[pos]),
        ));
    }
    if bytes.is_empty() {
        return Err(err(base, "missing size header"));
    }

    let value = |range: std::ops::Range<usize>| -> Result<usize> {
        if range.end > bytes.len() {
            return Err(err(base + bytes.len(), "truncated size header"));
        }
        Ok(bytes[range]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (value(1..4)?, 4)
    } else {
        (value(2..8)?, 8)
    };

    let total_bits = n * n.saturating_sub(1) / 2;
    let needed = total_bits.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < needed {
        return Err(err(
            base + bytes.len(),
            format!("expected {needed} adjacency bytes for n={n}, found {}", data.len()),
        ));
    }
    if data.len() > needed {
        return Err(err(base + pos + needed, "trailing bytes after adjacency data"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if total_bits % 6 != 0 {
        let last = data[needed - 1] - OFFSET;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            pos += needed - 1;
            return Err(err(base + pos, "non-zero padding bits"));
        }
    }
    SimpleGraph::from_edges(n, edges)
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + OFFSET));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + OFFSET));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
