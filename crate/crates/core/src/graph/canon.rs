//! Canonical forms for isomorphism rejection.
//!
//! The canonical form of a graph is the graph6 encoding of the relabelling
//! whose upper-triangle adjacency string (graph6 column order) is
//! lexicographically smallest, taken over every permutation that keeps the
//! vertex classes of an isomorphism-invariant ordered partition in place.
//! The partition starts from the degree classes and is refined by neighbour
//! colour multisets until stable. Inside the backtracking search, prefixes
//! that are already larger than the best string are cut, and among unplaced
//! vertices of a class only one representative of each twin group is tried
//! (swapping twins is an automorphism that fixes everything placed so far).
//! Leaves that tie with the best string yield automorphisms; candidates in
//! the same orbit of those fixing the placed prefix are skipped as well.

use super::{bits, to_graph6, SimpleGraph, MASK_LIMIT};
use crate::error::{Error, Result};

/// Vertex-count limit applied by [`canonical_form`].
pub const DEFAULT_CANON_LIMIT: usize = 16;

pub fn canonical_form(g: &SimpleGraph) -> Result<Vec<u8>> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

/// Like [`canonical_form`] with an explicit vertex-count limit (at most 64).
pub fn canonical_form_with_limit(g: &SimpleGraph, limit: usize) -> Result<Vec<u8>> {
    let limit = limit.min(MASK_LIMIT);
    if g.n() > limit {
        return Err(Error::Capacity(format!(
            "canonical form limited to {limit} vertices, graph has {}",
            g.n()
        )));
    }
    let masks = g.masks().expect("graphs within the limit carry masks");
    let canon = SimpleGraph::from_masks(&canonical_masks(masks));
    Ok(to_graph6(&canon).into_bytes())
}

/// The canonical relabelling as `order[position] = vertex`.
pub fn canonical_labeling(g: &SimpleGraph) -> Result<Vec<usize>> {
    if g.n() > MASK_LIMIT {
        return Err(Error::Capacity(format!(
            "canonical labelling limited to {MASK_LIMIT} vertices"
        )));
    }
    Ok(labeling(g.masks().expect("n <= 64 carries masks")))
}

/// Adjacency masks of the canonically relabelled graph.
pub(crate) fn canonical_masks(adj: &[u64]) -> Vec<u64> {
    let order = labeling(adj);
    let mut position = vec![0usize; adj.len()];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    order
        .iter()
        .map(|&v| bits(adj[v]).fold(0u64, |acc, w| acc | 1 << position[w]))
        .collect()
}

fn labeling(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let colors = refine(adj);
    let mut slot_colors: Vec<usize> = colors.clone();
    slot_colors.sort_unstable();
    let mut search = Search {
        adj,
        colors: &colors,
        slot_colors: &slot_colors,
        order: Vec::with_capacity(n),
        columns: vec![0; n],
        best_columns: vec![0; n],
        best_order: Vec::new(),
        automorphisms: Vec::new(),
    };
    search.descend(0, true);
    search.best_order
}

/// Colour refinement starting from degrees; colours are ranks of
/// `(colour, sorted neighbour colours)` signatures, so they are invariant.
fn refine(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = distinct(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = bits(adj[v]).map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut ranked = signatures.clone();
        ranked.sort();
        ranked.dedup();
        colors = signatures
            .iter()
            .map(|s| ranked.binary_search(s).expect("signature present"))
            .collect();
        let refined = ranked.len();
        if refined == classes {
            return colors;
        }
        classes = refined;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    adj: &'a [u64],
    colors: &'a [usize],
    slot_colors: &'a [usize],
    order: Vec<usize>,
    /// `columns[p]`: adjacency of position `p` to positions `q < p`, with `q`
    /// stored at bit `63 - q` so that integer order equals string order.
    columns: Vec<u64>,
    best_columns: Vec<u64>,
    best_order: Vec<usize>,
    /// Automorphisms found from leaves that tie with the best string.
    automorphisms: Vec<Vec<usize>>,
}

const MAX_AUTOMORPHISMS: usize = 128;

impl Search<'_> {
    /// Returns true when the best labelling was replaced in this subtree.
    fn descend(&mut self, depth: usize, tied: bool) -> bool {
        let n = self.adj.len();
        if depth == n {
            if tied && !self.best_order.is_empty() {
                if self.automorphisms.len() < MAX_AUTOMORPHISMS {
                    let mut gamma = vec![0; n];
                    for (&from, &to) in self.best_order.iter().zip(&self.order) {
                        gamma[from] = to;
                    }
                    self.automorphisms.push(gamma);
                }
                return false;
            }
            self.best_order.clone_from(&self.order);
            self.best_columns.clone_from(&self.columns);
            return true;
        }
        let want = self.slot_colors[depth];
        let placed = self.order.iter().fold(0u64, |acc, &v| acc | 1 << v);
        let mut tried: Vec<usize> = Vec::new();
        let mut tied = tied && !self.best_order.is_empty();
        let mut improved = false;
        for v in 0..n {
            if self.colors[v] != want || placed >> v & 1 == 1 {
                continue;
            }
            if tried.iter().any(|&t| twins(self.adj, t, v)) {
                continue;
            }
            if !tried.is_empty() && self.same_orbit_as_tried(placed, &tried, v) {
                continue;
            }
            tried.push(v);
            let column = self
                .order
                .iter()
                .enumerate()
                .filter(|&(_, &w)| self.adj[v] >> w & 1 == 1)
                .fold(0u64, |acc, (q, _)| acc | 1 << (63 - q));
            let child_tied = if tied {
                match column.cmp(&self.best_columns[depth]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Less => false,
                    std::cmp::Ordering::Equal => true,
                }
            } else {
                false
            };
            self.columns[depth] = column;
            self.order.push(v);
            if self.descend(depth + 1, child_tied) {
                improved = true;
                // The best string now shares this node's prefix.
                tied = true;
            }
            self.order.pop();
        }
        improved
    }

    /// Whether `v` shares an orbit with an already tried vertex under the
    /// automorphisms found so far that fix every placed vertex.
    fn same_orbit_as_tried(&self, placed: u64, tried: &[usize], v: usize) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if bits(placed).any(|p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}

fn twins(adj: &[u64], a: usize, b: usize) -> bool {
    adj[a] & !(1 << b) == adj[b] & !(1 << a)
}
