//! Graph and multigraph representations, text formats and canonical forms.
//!
//! Vertices are dense `0..n` indices. Simple graphs keep sorted neighbour
//! lists and, when `n <= 64`, one adjacency bitmask per vertex; the counting
//! routines use the bitmask form whenever it is present.

mod canon;
mod graph6;
mod multi_text;
mod multigraph;

pub use canon::{canonical_form, canonical_form_with_limit, canonical_labeling, DEFAULT_CANON_LIMIT};
pub use graph6::{parse_graph6, to_graph6};
pub use multi_text::{parse_multigraph, to_multi_text};
pub use multigraph::Multigraph;

pub(crate) use canon::canonical_masks;

use num_rational::Ratio;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count for which the per-vertex `u64` bitmask adjacency exists.
pub const MASK_LIMIT: usize = 64;

/// A loop-free undirected graph on `n` labelled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    m: usize,
    neighbors: Vec<Vec<usize>>,
    masks: Option<Vec<u64>>,
}

/// Maximum, minimum and average degree of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub max: u64,
    pub min: u64,
    /// `2m / n`, kept exact.
    pub avg: Ratio<u64>,
}

impl DegreeStats {
    pub(crate) fn from_degrees(degrees: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut n = 0u64;
        let mut sum = 0u64;
        let mut max = 0u64;
        let mut min = u64::MAX;
        for d in degrees {
            n += 1;
            sum += d;
            max = max.max(d);
            min = min.min(d);
        }
        if n == 0 {
            return Err(Error::Domain(
                "degree statistics are undefined for the graph with no vertices".into(),
            ));
        }
        Ok(DegreeStats {
            max,
            min,
            avg: Ratio::new(sum, n),
        })
    }
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            m: 0,
            neighbors: vec![Vec::new(); n],
            masks: (n <= MASK_LIMIT).then(|| vec![0; n]),
        }
    }

    /// Builds a graph from an edge list.
    ///
    /// Loops, repeated pairs (in either orientation) and endpoints `>= n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut neighbors = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            neighbors[u].push(v);
            neighbors[v].push(u);
            m += 1;
        }
        for (v, list) in neighbors.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0]), v.max(w[0]));
                return Err(Error::InvalidGraph(format!("duplicate edge {{{a},{b}}}")));
            }
        }
        Ok(Self::from_sorted_neighbors(n, m, neighbors))
    }

    /// Builds a graph from per-vertex adjacency bitmasks (`n <= 64`).
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        debug_assert!(n <= MASK_LIMIT);
        let neighbors: Vec<Vec<usize>> = masks.iter().map(|&mask| bits(mask).collect()).collect();
        let m = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        SimpleGraph {
            n,
            m,
            neighbors,
            masks: Some(masks.to_vec()),
        }
    }

    fn from_sorted_neighbors(n: usize, m: usize, neighbors: Vec<Vec<usize>>) -> Self {
        let masks = (n <= MASK_LIMIT).then(|| {
            neighbors
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1 << w)))
                .collect()
        });
        SimpleGraph {
            n,
            m,
            neighbors,
            masks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.masks {
            Some(masks) => masks[u] >> v & 1 == 1,
            None => self.neighbors[u].binary_search(&v).is_ok(),
        }
    }

    /// Adjacency bitmasks, present when `n <= 64`.
    pub fn masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        DegreeStats::from_degrees((0..self.n).map(|v| self.degree(v) as u64))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of connected components (isolated vertices count).
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut stack = Vec::new();
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// `G - u`: vertex `u` and its edges removed, vertices above `u` shifted down by one.
    pub fn remove_vertex(&self, u: usize) -> SimpleGraph {
        assert!(u < self.n, "vertex {u} out of range");
        let shift = |w: usize| if w > u { w - 1 } else { w };
        let neighbors = (0..self.n)
            .filter(|&v| v != u)
            .map(|v| {
                self.neighbors[v]
                    .iter()
                    .filter(|&&w| w != u)
                    .map(|&w| shift(w))
                    .collect()
            })
            .collect();
        Self::from_sorted_neighbors(self.n - 1, self.m - self.degree(u), neighbors)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v]));
        SimpleGraph::from_edges(self.n, edges).expect("a permutation preserves simplicity")
    }

    /// Disjoint union: the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let offset = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)));
        SimpleGraph::from_edges(self.n + other.n, edges).expect("disjoint union stays simple")
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterates the set bits of `mask` from least to most significant.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
