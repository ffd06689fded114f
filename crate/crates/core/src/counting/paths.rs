use num_bigint::BigUint;

use super::cycles::neighbor_lists;
use super::engine::{self, Table, Unit};
use super::{Count, PairWeights};
use crate::error::{Error, Result};
use crate::graph::{bits, Multigraph, SimpleGraph};

fn check_endpoints(n: usize, s: usize, t: usize) -> Result<()> {
    if s >= n || t >= n {
        return Err(Error::InvalidArgument(format!(
            "path endpoints {s}, {t} must lie in 0..{n}"
        )));
    }
    if s == t {
        return Err(Error::InvalidArgument(
            "path endpoints must be distinct".into(),
        ));
    }
    Ok(())
}

/// Number of simple paths from `s` to `t`.
pub fn count_paths(g: &SimpleGraph, s: usize, t: usize) -> Result<Count> {
    check_endpoints(g.n(), s, t)?;
    Ok(match g.masks() {
        Some(adj) => engine::paths_masks::<u128, _>(adj, &Unit, s, t).into(),
        None => engine::paths_lists::<u128, _>(&neighbor_lists(g), &Unit, s, t).into(),
    })
}

/// Number of simple paths from `s` to `t`, each weighted by the product of
/// the multiplicities of its edges.
pub fn count_paths_multi(g: &Multigraph, s: usize, t: usize) -> Result<Count> {
    check_endpoints(g.n(), s, t)?;
    let table = Table::new(g.n(), g.pairs());
    let simple = g.underlying();
    Ok(match simple.masks() {
        Some(adj) => engine::paths_masks::<BigUint, _>(adj, &table, s, t),
        None => engine::paths_lists::<BigUint, _>(&neighbor_lists(simple), &table, s, t),
    })
}

/// Path counts in `G - u` between the neighbours `u_1 < ... < u_k` of `u`.
///
/// Index `i` of the result corresponds to the `i`-th smallest neighbour.
pub fn pair_weights(g: &SimpleGraph, u: usize) -> Result<PairWeights> {
    if u >= g.n() {
        return Err(Error::InvalidArgument(format!("vertex {u} out of range")));
    }
    let rest = g.remove_vertex(u);
    let shifted: Vec<usize> = g
        .neighbors(u)
        .iter()
        .map(|&w| if w > u { w - 1 } else { w })
        .collect();
    let k = shifted.len();
    let rows: Vec<Vec<Count>> = match rest.masks() {
        Some(adj) if rest.n() <= PATH_DP_LIMIT && rest.m() >= 2 * rest.n() => shifted
            .iter()
            .map(|&s| {
                let counts = paths_from_subset_dp(adj, s);
                shifted.iter().map(|&t| Count::from(counts[t])).collect()
            })
            .collect(),
        Some(adj) => shifted
            .iter()
            .map(|&s| {
                let counts = engine::paths_from_masks(adj, s);
                shifted.iter().map(|&t| Count::from(counts[t])).collect()
            })
            .collect(),
        None => {
            let lists = neighbor_lists(&rest);
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            if j <= i {
                                Count::ZERO
                            } else {
                                engine::paths_lists::<u128, _>(&lists, &Unit, shifted[i], shifted[j])
                                    .into()
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    Ok(PairWeights::from_fn(k, |i, j| rows[i][j].clone()))
}

const PATH_DP_LIMIT: usize = 18;

/// Number of simple paths from `s` to every vertex, by dynamic programming
/// over the set of vertices visited after `s`.
fn paths_from_subset_dp(adj: &[u64], s: usize) -> Vec<u64> {
    let n = adj.len();
    // Local indices skip s.
    let to_local = |mask: u64| {
        let low = mask & ((1u64 << s) - 1);
        let high = (mask >> (s + 1)) << s;
        low | high
    };
    let to_global = |j: usize| if j < s { j } else { j + 1 };
    let width = n - 1;
    let local_adj: Vec<u64> = (0..width).map(|j| to_local(adj[to_global(j)])).collect();
    let mut table = vec![0u64; (1usize << width) * width];
    for j in bits(to_local(adj[s])) {
        table[(1 << j) * width + j] = 1;
    }
    let mut counts = vec![0u64; n];
    for set in 1usize..1 << width {
        for j in bits(set as u64) {
            let c = table[set * width + j];
            if c == 0 {
                continue;
            }
            counts[to_global(j)] += c;
            for t in bits(local_adj[j] & !(set as u64)) {
                table[(set | 1 << t) * width + t] += c;
            }
        }
    }
    counts
}

/// Number of cycles through `u`, i.e. the total of [`pair_weights`].
pub fn cycles_through_vertex(g: &SimpleGraph, u: usize) -> Result<Count> {
    Ok(pair_weights(g, u)?.total())
}
