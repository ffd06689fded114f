//! The `MULTI` text format for multigraphs:
//!
//! ```text
//! MULTI <n>
//! <u> <v> <mult>      one line per pair, 0 <= u < v < n, mult >= 1
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use super::Multigraph;
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write;

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::MultiFormat {
        line,
        reason: reason.into(),
    }
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing MULTI header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["MULTI", count] => count
            .parse::<usize>()
            .map_err(|_| err(header_line, format!("invalid vertex count {count:?}")))?,
        _ => return Err(err(header_line, "expected header \"MULTI <n>\"")),
    };

    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [u, v, k] = fields[..] else {
            return Err(err(line, "expected \"<u> <v> <mult>\""));
        };
        let number = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| err(line, format!("invalid integer {s:?}")))
        };
        let (u, v, k) = (number(u)?, number(v)?, number(k)?);
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        if u >= n as u64 || v >= n as u64 {
            return Err(err(line, format!("vertex index out of range 0..{n}")));
        }
        if u > v {
            return Err(err(line, "pairs must be written with u < v"));
        }
        if k < 1 {
            return Err(err(line, "multiplicity must be at least 1"));
        }
        let (u, v) = (u as usize, v as usize);
        if !seen.insert((u, v)) {
            return Err(err(line, format!("duplicate pair {u} {v}")));
        }
        entries.push(((u, v), k));
    }
    Multigraph::from_multiplicities(n, entries)
}

/// Serialises a multigraph; pairs are written in lexicographic order.
pub fn to_multi_text(g: &Multigraph) -> String {
    let mut out = format!("MULTI {}\n", g.n());
    for ((u, v), k) in g.pairs() {
        writeln!(out, "{u} {v} {k}").unwrap();
    }
    out
}
