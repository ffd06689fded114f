//! Isomorph-free generation of connected graphs by edge count.
//!
//! Level `L` holds one canonical representative of every connected graph
//! with `L` edges that survives the filters. Level `L + 1` is obtained by
//! adding to each representative either an edge between two existing
//! vertices or an edge to one new vertex, canonicalising, and removing
//! duplicates. Every connected graph can be built this way (delete a cycle
//! edge or a leaf edge to find its parent), and every filter below is
//! inherited by subgraphs or bounds how far a subgraph is from a valid final
//! graph, so no target graph is lost.

use rayon::prelude::*;

use crate::graph::{bits, canonical_masks};

/// Canonical adjacency masks; the vertex count is the length.
pub(crate) type Key = Vec<u64>;

#[derive(Clone, Debug)]
pub(crate) struct Filters {
    /// Final edge count.
    pub target_edges: usize,
    pub max_vertices: usize,
    /// Minimum degree the final graphs must reach (0, 2 or 3).
    pub min_degree: usize,
    /// Maximum degree allowed anywhere.
    pub max_degree: Option<usize>,
}

impl Filters {
    /// Whether a graph with `edges` edges can still grow into a target graph.
    fn viable(&self, adj: &[u64], edges: usize) -> bool {
        if adj.len() > self.max_vertices {
            return false;
        }
        if let Some(cap) = self.max_degree {
            if adj.iter().any(|m| m.count_ones() as usize > cap) {
                return false;
            }
        }
        if self.min_degree > 0 {
            let remaining = self.target_edges - edges;
            let deficit: usize = adj
                .iter()
                .map(|m| self.min_degree.saturating_sub(m.count_ones() as usize))
                .sum();
            // one new edge lowers the deficit by at most two
            if deficit > 2 * remaining {
                return false;
            }
        }
        true
    }
}

/// The single edge, the only connected graph with one edge.
pub(crate) fn first_level() -> Vec<Key> {
    vec![vec![0b10, 0b01]]
}

/// Canonical children of `parents`, sorted and deduplicated. Returns the
/// level and the number of children examined.
pub(crate) fn next_level(parents: &[Key], edges: usize, filters: &Filters) -> (Vec<Key>, u64) {
    let child_edges = edges + 1;
    let (mut level, examined) = parents
        .par_iter()
        .map(|adj| {
            let mut out = Vec::new();
            let mut examined = 0u64;
            let n = adj.len();
            let mut consider = |child: Vec<u64>, out: &mut Vec<Key>| {
                examined += 1;
                if filters.viable(&child, child_edges) {
                    out.push(canonical_masks(&child));
                }
            };
            for i in 0..n {
                for j in bits(!adj[i] & ((1u64 << n) - 1) & !((1u64 << (i + 1)) - 1)) {
                    let mut child = adj.clone();
                    child[i] |= 1 << j;
                    child[j] |= 1 << i;
                    consider(child, &mut out);
                }
            }
            if n < filters.max_vertices && n < 64 {
                for i in 0..n {
                    let mut child = adj.clone();
                    child[i] |= 1 << n;
                    child.push(1 << i);
                    consider(child, &mut out);
                }
            }
            out.sort_unstable();
            out.dedup();
            (out, examined)
        })
        .reduce(
            || (Vec::new(), 0),
            |(mut a, x), (b, y)| {
                a.extend(b);
                (a, x + y)
            },
        );
    level.par_sort_unstable();
    level.dedup();
    (level, examined)
}
