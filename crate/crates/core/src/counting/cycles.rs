use num_bigint::BigUint;
use num_integer::Integer;

use super::engine::{self, Table, Unit};
use super::Count;
use crate::error::{Error, Result};
use crate::graph::{bits, Multigraph, SimpleGraph};

/// Largest vertex count accepted by [`count_cycles_subset_dp`].
pub const SUBSET_DP_LIMIT: usize = 18;

/// Algorithm choice for [`count_cycles_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CycleMethod {
    /// Rooted depth-first enumeration (every cycle is visited).
    Dfs,
    /// Dynamic program over vertex subsets, `O(2^n n^2)`.
    SubsetDp,
    /// The subset program for small dense graphs, enumeration otherwise.
    #[default]
    Auto,
}

/// Number of simple cycles in `g`.
pub fn count_cycles(g: &SimpleGraph) -> Count {
    match g.masks() {
        Some(adj) => engine::cycles_masks::<u128, _>(adj, &Unit).into(),
        None => engine::cycles_lists::<u128, _>(&neighbor_lists(g), &Unit).into(),
    }
}

pub fn count_cycles_with(g: &SimpleGraph, method: CycleMethod) -> Result<Count> {
    match method {
        CycleMethod::Dfs => Ok(count_cycles(g)),
        CycleMethod::SubsetDp => count_cycles_subset_dp(g),
        CycleMethod::Auto => {
            // Above roughly 2n edges the cycle count outgrows the subset table.
            if g.n() <= SUBSET_DP_LIMIT && g.m() >= 2 * g.n() {
                count_cycles_subset_dp(g)
            } else {
                Ok(count_cycles(g))
            }
        }
    }
}

/// Cycle count by dynamic programming over subsets.
///
/// For each root `r`, `paths[S][v]` is the number of simple paths leaving `r`
/// whose remaining vertices are exactly `S` (all above `r`) and which end at
/// `v`. Every cycle rooted at `r` is seen once per direction.
pub fn count_cycles_subset_dp(g: &SimpleGraph) -> Result<Count> {
    let n = g.n();
    if n > SUBSET_DP_LIMIT {
        return Err(Error::Capacity(format!(
            "subset dynamic program limited to {SUBSET_DP_LIMIT} vertices, graph has {n}"
        )));
    }
    let adj = g.masks().expect("small graphs carry masks");
    let mut total: u128 = 0;
    for r in 0..n {
        let width = n - r - 1;
        if width < 2 {
            continue;
        }
        let local = |mask: u64| mask >> (r + 1);
        let root_nbrs = local(adj[r]);
        let local_adj: Vec<u64> = (r + 1..n).map(|v| local(adj[v])).collect();
        let mut paths = vec![0u64; (1usize << width) * width];
        for j in bits(root_nbrs) {
            paths[(1 << j) * width + j] = 1;
        }
        let mut twice: u128 = 0;
        for set in 1usize..1 << width {
            let size = set.count_ones();
            for j in bits(set as u64) {
                let c = paths[set * width + j];
                if c == 0 {
                    continue;
                }
                if size >= 2 && root_nbrs >> j & 1 == 1 {
                    twice += c as u128;
                }
                for t in bits(local_adj[j] & !(set as u64)) {
                    let slot = &mut paths[(set | 1 << t) * width + t];
                    *slot = slot.checked_add(c).expect("path count fits in u64 below the limit");
                }
            }
        }
        debug_assert!(twice.is_even());
        total += twice / 2;
    }
    Ok(BigUint::from(total))
}

/// Number of cycles in a multigraph: every vertex-simple cycle on at least
/// three vertices weighted by the product of its edge multiplicities, plus
/// `C(k, 2)` two-edge cycles for every pair joined by `k` parallel edges.
pub fn count_cycles_multi(g: &Multigraph) -> Count {
    let two_cycles: Count = g
        .pairs()
        .map(|(_, k)| BigUint::from(k) * BigUint::from(k - 1) / 2u32)
        .sum();
    let table = Table::new(g.n(), g.pairs());
    let simple = g.underlying();
    // Ahrens: at most 2^m' cycles; each weighs at most max_mult^n.
    let magnitude = simple.m() as f64 + g.n() as f64 * (g.max_multiplicity().max(1) as f64).log2();
    let long: Count = match (simple.masks(), magnitude < 120.0) {
        (Some(adj), true) => engine::cycles_masks::<u128, _>(adj, &table).into(),
        (Some(adj), false) => engine::cycles_masks::<BigUint, _>(adj, &table),
        (None, true) => engine::cycles_lists::<u128, _>(&neighbor_lists(simple), &table).into(),
        (None, false) => engine::cycles_lists::<BigUint, _>(&neighbor_lists(simple), &table),
    };
    long + two_cycles
}

pub(super) fn neighbor_lists(g: &SimpleGraph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Cycle count straight from adjacency masks, for the search hot loop.
pub(crate) fn count_cycles_masks(adj: &[u64]) -> u128 {
    engine::cycles_masks::<u128, _>(adj, &Unit)
}
