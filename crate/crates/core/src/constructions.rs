//! Graph families with many cycles.
//!
//! `H_n` is a ladder with both diagonals in every square: vertices
//! `u_1..u_{n+1}` and `v_1..v_{n+1}`, with `u_i v_j` for `|i - j| <= 1` and
//! the two rails `u_i u_{i+1}`, `v_i v_{i+1}`. Vertex `u_i` is labelled
//! `i - 1` and `v_i` is labelled `n + i`. `G_n` identifies the two ends
//! `u_1` and `u_{n+1}`, turning the path counts of `H_n` into cycles.

use num_traits::One;

use crate::counting::{count_paths, Count};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, SimpleGraph};

/// Largest `n` for which [`path_count_p`] enumerates paths directly.
pub const PATH_ENUMERATION_LIMIT: u64 = 8;

/// The ladder `H_n` on `2n + 2` vertices and `5n + 1` edges.
pub fn construct_hn(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::Domain("H_n needs n >= 1".into()));
    }
    let u = |i: usize| i - 1;
    let v = |i: usize| n + i;
    let mut edges = Vec::with_capacity(5 * n + 1);
    for i in 1..=n + 1 {
        edges.push((u(i), v(i)));
        if i <= n {
            edges.push((u(i), v(i + 1)));
            edges.push((u(i + 1), v(i)));
            edges.push((u(i), u(i + 1)));
            edges.push((v(i), v(i + 1)));
        }
    }
    SimpleGraph::from_edges(2 * n + 2, edges)
}

/// Number of simple paths from `u_1` to `u_{n+1}` in `H_n`.
///
/// Enumerated for `n <= 8`; beyond that, `P(n) = 4P(n-1) + 4P(n-2)` is run
/// forward from the enumerated `P(1)` and `P(2)`.
pub fn path_count_p(n: u64) -> Result<Count> {
    if n < 1 {
        return Err(Error::Domain("P(n) needs n >= 1".into()));
    }
    if n <= PATH_ENUMERATION_LIMIT {
        return enumerate_p(n);
    }
    let (mut a, mut b) = (enumerate_p(1)?, enumerate_p(2)?);
    for _ in 3..=n {
        let c = (&a + &b) * 4u8;
        a = b;
        b = c;
    }
    Ok(b)
}

/// `P(n)` by direct enumeration, regardless of size.
pub fn enumerate_p(n: u64) -> Result<Count> {
    let n = usize::try_from(n).map_err(|_| Error::Domain("n too large".into()))?;
    let h = construct_hn(n)?;
    count_paths(&h, 0, n)
}

/// `H_n` with `u_1` and `u_{n+1}` identified: `2n + 1` vertices, `5n + 1`
/// edges. Vertex `n` (that is, `u_{n+1}`) becomes 0 and later vertices shift
/// down by one.
pub fn construct_gn(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::Domain(
            "G_n needs n >= 3; smaller n would create parallel edges".into(),
        ));
    }
    let h = construct_hn(n)?;
    let relabel = |x: usize| match x.cmp(&n) {
        std::cmp::Ordering::Less => x,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => x - 1,
    };
    SimpleGraph::from_edges(2 * n + 1, h.edges().map(|(a, b)| (relabel(a), relabel(b))))
}

/// A graph with exactly `m` edges and as many cycles as
/// `G_{floor((m-1)/5)}`: the leftover `0..=4` edges form a pendant path
/// hanging from vertex 0.
pub fn construct_lower_bound_graph(m: usize) -> Result<SimpleGraph> {
    if m < 16 {
        return Err(Error::Domain(format!("lower-bound graph needs m >= 16, got {m}")));
    }
    let k = (m - 1) / 5;
    let g = construct_gn(k)?;
    let leftover = m - 5 * k - 1;
    let base = g.n();
    let tail = (0..leftover).map(|i| (if i == 0 { 0 } else { base + i - 1 }, base + i));
    SimpleGraph::from_edges(base + leftover, g.edges().chain(tail))
}

/// The cycle `0, 1, ..., n-1` with `m` edges spread as evenly as possible
/// over its `n` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiCycleSpec {
    n: usize,
    m: u64,
}

impl MultiCycleSpec {
    pub fn new(n: usize, m: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("C_(n,m) needs n >= 2, got {n}")));
        }
        if m < n as u64 {
            return Err(Error::Domain(format!("C_(n,m) needs m >= n, got n={n}, m={m}")));
        }
        Ok(MultiCycleSpec { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Multiplicity of the pair `(i, i+1 mod n)`; the larger values come
    /// first. With `n = 2` the single pair `(0, 1)` carries all `m` edges.
    pub fn multiplicities(&self) -> Vec<u64> {
        if self.n == 2 {
            return vec![self.m];
        }
        let n = self.n as u64;
        let (q, r) = (self.m / n, self.m % n);
        (0..n).map(|i| if i < r { q + 1 } else { q }).collect()
    }
}

pub fn construct_cnm(spec: &MultiCycleSpec) -> Result<Multigraph> {
    let n = spec.n;
    let pairs = spec
        .multiplicities()
        .into_iter()
        .enumerate()
        .map(|(i, k)| {
            let (a, b) = (i, (i + 1) % n);
            ((a.min(b), a.max(b)), k)
        });
    Multigraph::from_multiplicities(n, pairs)
}

fn choose2(k: u64) -> Count {
    Count::from(k) * Count::from(k.saturating_sub(1)) / 2u8
}

/// Closed form for the cycles of `C_{n,m}`: the product of the
/// multiplicities (one long cycle per choice of edges) plus the parallel
/// pairs on every edge.
pub fn cnm_cycle_count(spec: &MultiCycleSpec) -> Count {
    let mults = spec.multiplicities();
    if spec.n == 2 {
        return choose2(spec.m);
    }
    let long: Count = mults.iter().fold(Count::one(), |acc, &k| acc * k);
    long + mults.iter().map(|&k| choose2(k)).sum::<Count>()
}
