//! Depth-first enumeration of simple paths, shared by the cycle and path
//! counters. Paths are weighted by the product of the edge weights along
//! them (all 1 for simple graphs, multiplicities for multigraphs).

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::graph::bits;

/// Accumulator for weighted path sums.
pub(crate) trait Tally: Clone + Send {
    fn zero() -> Self;
    fn one() -> Self;
    fn scaled(&self, k: u64) -> Self;
    fn accumulate(&mut self, other: Self);
}

impl Tally for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    #[inline]
    fn scaled(&self, k: u64) -> Self {
        self * k as u128
    }
    #[inline]
    fn accumulate(&mut self, other: Self) {
        *self += other;
    }
}

impl Tally for BigUint {
    fn zero() -> Self {
        BigUint::ZERO
    }
    fn one() -> Self {
        BigUint::from(1u8)
    }
    fn scaled(&self, k: u64) -> Self {
        self * k
    }
    fn accumulate(&mut self, other: Self) {
        *self += other;
    }
}

/// Edge weights for weighted enumeration.
pub(crate) trait Weights: Sync {
    fn weight(&self, u: usize, v: usize) -> u64;
}

/// Every edge has weight 1.
pub(crate) struct Unit;

impl Weights for Unit {
    #[inline(always)]
    fn weight(&self, _: usize, _: usize) -> u64 {
        1
    }
}

/// Dense multiplicity table.
pub(crate) struct Table {
    n: usize,
    w: Vec<u64>,
}

impl Table {
    pub(crate) fn new(n: usize, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut w = vec![0; n * n];
        for ((u, v), k) in entries {
            w[u * n + v] = k;
            w[v * n + u] = k;
        }
        Table { n, w }
    }
}

impl Weights for Table {
    #[inline]
    fn weight(&self, u: usize, v: usize) -> u64 {
        self.w[u * self.n + v]
    }
}

/// Work units are `(root, first)` pairs; a cycle through vertices all
/// `>= root` is found once, starting along its smaller root neighbour and
/// closing through the larger one.
fn cycle_units(neighbors: impl Fn(usize) -> Vec<usize>, n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|r| {
            neighbors(r)
                .into_iter()
                .filter(move |&a| a > r)
                .map(move |a| (r, a))
        })
        .collect()
}

const PARALLEL_THRESHOLD: usize = 24;

fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Weighted count of cycles with at least three vertices, bitmask form.
pub(crate) fn cycles_masks<T: Tally, W: Weights>(adj: &[u64], weights: &W) -> T {
    let units = cycle_units(|r| bits(adj[r]).collect(), adj.len());
    let run = |&(r, a): &(usize, usize)| {
        let allowed = above(r);
        let closers = adj[r] & above(a);
        let start = T::one().scaled(weights.weight(r, a));
        let mut total = T::zero();
        cycle_dfs_masks(adj, weights, r, allowed, closers, a, 1 << r | 1 << a, &start, &mut total);
        total
    };
    sum_units(&units, adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2, run)
}

#[allow(clippy::too_many_arguments)]
fn cycle_dfs_masks<T: Tally, W: Weights>(
    adj: &[u64],
    weights: &W,
    root: usize,
    allowed: u64,
    closers: u64,
    v: usize,
    visited: u64,
    weight: &T,
    total: &mut T,
) {
    if closers >> v & 1 == 1 {
        total.accumulate(weight.scaled(weights.weight(v, root)));
    }
    for w in bits(adj[v] & allowed & !visited) {
        let next = weight.scaled(weights.weight(v, w));
        cycle_dfs_masks(adj, weights, root, allowed, closers, w, visited | 1 << w, &next, total);
    }
}

/// Same enumeration over neighbour lists, for graphs beyond 64 vertices.
pub(crate) fn cycles_lists<T: Tally, W: Weights>(neighbors: &[Vec<usize>], weights: &W) -> T {
    let n = neighbors.len();
    let units = cycle_units(|r| neighbors[r].clone(), n);
    let run = |&(r, a): &(usize, usize)| {
        let mut visited = vec![false; n];
        visited[r] = true;
        visited[a] = true;
        let start = T::one().scaled(weights.weight(r, a));
        let mut total = T::zero();
        cycle_dfs_lists(neighbors, weights, r, a, a, &mut visited, &start, &mut total);
        total
    };
    sum_units(&units, neighbors.iter().map(Vec::len).sum::<usize>() / 2, run)
}

#[allow(clippy::too_many_arguments)]
fn cycle_dfs_lists<T: Tally, W: Weights>(
    neighbors: &[Vec<usize>],
    weights: &W,
    root: usize,
    first: usize,
    v: usize,
    visited: &mut [bool],
    weight: &T,
    total: &mut T,
) {
    for &w in &neighbors[v] {
        if w == root && v > first {
            total.accumulate(weight.scaled(weights.weight(v, root)));
        }
        if w <= root || visited[w] {
            continue;
        }
        visited[w] = true;
        let next = weight.scaled(weights.weight(v, w));
        cycle_dfs_lists(neighbors, weights, root, first, w, visited, &next, total);
        visited[w] = false;
    }
}

fn sum_units<T: Tally, F>(units: &[(usize, usize)], m: usize, run: F) -> T
where
    F: Fn(&(usize, usize)) -> T + Sync,
{
    if m >= PARALLEL_THRESHOLD {
        units.par_iter().map(&run).reduce(T::zero, |mut a, b| {
            a.accumulate(b);
            a
        })
    } else {
        units.iter().map(run).fold(T::zero(), |mut a, b| {
            a.accumulate(b);
            a
        })
    }
}

/// Weighted number of simple `s`-`t` paths, bitmask form.
pub(crate) fn paths_masks<T: Tally, W: Weights>(adj: &[u64], weights: &W, s: usize, t: usize) -> T {
    fn go<T: Tally, W: Weights>(
        adj: &[u64],
        weights: &W,
        t: usize,
        v: usize,
        visited: u64,
        weight: &T,
        total: &mut T,
    ) {
        for w in bits(adj[v] & !visited) {
            let next = weight.scaled(weights.weight(v, w));
            if w == t {
                total.accumulate(next);
            } else {
                go(adj, weights, t, w, visited | 1 << w, &next, total);
            }
        }
    }
    let mut total = T::zero();
    go(adj, weights, t, s, 1 << s, &T::one(), &mut total);
    total
}

pub(crate) fn paths_lists<T: Tally, W: Weights>(
    neighbors: &[Vec<usize>],
    weights: &W,
    s: usize,
    t: usize,
) -> T {
    fn go<T: Tally, W: Weights>(
        neighbors: &[Vec<usize>],
        weights: &W,
        t: usize,
        v: usize,
        visited: &mut [bool],
        weight: &T,
        total: &mut T,
    ) {
        for &w in &neighbors[v] {
            if visited[w] {
                continue;
            }
            let next = weight.scaled(weights.weight(v, w));
            if w == t {
                total.accumulate(next);
            } else {
                visited[w] = true;
                go(neighbors, weights, t, w, visited, &next, total);
                visited[w] = false;
            }
        }
    }
    let mut visited = vec![false; neighbors.len()];
    visited[s] = true;
    let mut total = T::zero();
    go(neighbors, weights, t, s, &mut visited, &T::one(), &mut total);
    total
}

/// Number of simple paths from `s` ending at each vertex (unweighted).
pub(crate) fn paths_from_masks(adj: &[u64], s: usize) -> Vec<u64> {
    fn go(adj: &[u64], v: usize, visited: u64, counts: &mut [u64]) {
        for w in bits(adj[v] & !visited) {
            counts[w] += 1;
            go(adj, w, visited | 1 << w, counts);
        }
    }
    let mut counts = vec![0; adj.len()];
    go(adj, s, 1 << s, &mut counts);
    counts
}
