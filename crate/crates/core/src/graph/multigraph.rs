use std::collections::BTreeMap;

use super::{DegreeStats, SimpleGraph};
use crate::error::{Error, Result};

/// A loop-free undirected multigraph stored as per-pair edge multiplicities.
///
/// Every stored multiplicity is at least 1, and `m` is their sum. The
/// underlying simple graph (one edge per pair with positive multiplicity) is
/// kept alongside so the counting code can reuse the simple-graph machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    m: u64,
    mult: BTreeMap<(usize, usize), u64>,
    underlying: SimpleGraph,
}

impl Multigraph {
    /// Builds a multigraph from `((u, v), multiplicity)` entries.
    ///
    /// Each unordered pair may appear once; loops, zero multiplicities and
    /// out-of-range endpoints are rejected.
    pub fn from_multiplicities<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut mult = BTreeMap::new();
        let mut m = 0u64;
        for ((u, v), k) in entries {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "pair {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "loop at vertex {u}: loops never lie on a cycle and are not allowed"
                )));
            }
            if k == 0 {
                return Err(Error::InvalidGraph(format!(
                    "pair {{{u},{v}}} has multiplicity 0"
                )));
            }
            let key = (u.min(v), u.max(v));
            if mult.insert(key, k).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "pair {{{},{}}} listed twice",
                    key.0, key.1
                )));
            }
            m = m
                .checked_add(k)
                .ok_or_else(|| Error::Capacity("total edge count overflows u64".into()))?;
        }
        let underlying = SimpleGraph::from_edges(n, mult.keys().copied())?;
        Ok(Multigraph {
            n,
            m,
            mult,
            underlying,
        })
    }

    /// The multigraph with every multiplicity equal to 1.
    pub fn from_simple(g: &SimpleGraph) -> Self {
        Multigraph {
            n: g.n(),
            m: g.m() as u64,
            mult: g.edges().map(|e| (e, 1)).collect(),
            underlying: g.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of edges, parallel edges counted individually.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of parallel edges between `u` and `v` (0 when not adjacent).
    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// `((u, v), multiplicity)` with `u < v`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.mult.iter().map(|(&p, &k)| (p, k))
    }

    pub fn underlying(&self) -> &SimpleGraph {
        &self.underlying
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.mult.values().copied().max().unwrap_or(0)
    }

    /// Degree of `v` counting parallel edges.
    pub fn degree(&self, v: usize) -> u64 {
        self.underlying
            .neighbors(v)
            .iter()
            .map(|&w| self.multiplicity(v, w))
            .sum()
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        DegreeStats::from_degrees((0..self.n).map(|v| self.degree(v)))
    }

    pub fn max_degree(&self) -> u64 {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn components(&self) -> usize {
        self.underlying.components()
    }
}
