//! Exact counting of simple cycles and simple paths.
//!
//! Counts are arbitrary precision. The baseline cycle counter roots every
//! cycle at its minimum vertex and walks depth-first through larger vertices
//! with a visited bitmask; each cycle is reached exactly once because the walk
//! leaves the root through the smaller of the root's two cycle neighbours and
//! only closes through the larger one. A subset dynamic program is also
//! provided for small dense graphs, where the number of cycles dwarfs `2^n`.

mod cycles;
mod engine;
mod paths;

pub use cycles::{
    count_cycles, count_cycles_multi, count_cycles_subset_dp, count_cycles_with, CycleMethod,
    SUBSET_DP_LIMIT,
};
pub(crate) use cycles::count_cycles_masks;
pub use paths::{count_paths, count_paths_multi, cycles_through_vertex, pair_weights};

use num_bigint::BigUint;
use num_traits::Zero;

/// An exact non-negative cycle or path count.
pub type Count = BigUint;

/// Path counts between the neighbours of a vertex.
///
/// `w(i, j)` for `i != j` is symmetric; the diagonal is zero. Only the strict
/// upper triangle is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWeights {
    k: usize,
    upper: Vec<Count>,
}

static ZERO: Count = BigUint::ZERO;

impl PairWeights {
    /// Builds weights from `f(i, j)` evaluated for `i < j`.
    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> Count) -> Self {
        let mut upper = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                upper.push(f(i, j));
            }
        }
        PairWeights { k, upper }
    }

    pub fn zeros(k: usize) -> Self {
        Self::from_fn(k, |_, _| Count::zero())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        i * (2 * self.k - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> &Count {
        assert!(i < self.k && j < self.k, "index out of range");
        if i == j {
            &ZERO
        } else {
            &self.upper[self.index(i, j)]
        }
    }

    /// `S`, the sum over unordered pairs.
    pub fn total(&self) -> Count {
        self.upper.iter().sum()
    }

    /// Sum of `w(i, j)` over `j != i`.
    pub fn vertex_weight(&self, i: usize) -> Count {
        (0..self.k).filter(|&j| j != i).map(|j| self.get(i, j)).sum()
    }

    /// Weights restricted to `indices`, re-indexed in the given order.
    pub fn restrict(&self, indices: &[usize]) -> PairWeights {
        PairWeights::from_fn(indices.len(), |a, b| self.get(indices[a], indices[b]).clone())
    }
}
