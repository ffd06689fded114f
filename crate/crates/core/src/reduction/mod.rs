//! Degree-reducing surgery.
//!
//! For a vertex `u` of degree `k >= 12`, the neighbours of `u` are weighted
//! pairwise by the number of paths between them in `G - u`. Six neighbours
//! are set aside (the deletion set) and the other `k - 6` are split into four
//! balanced parts `U_1..U_4`. The new graph `H` drops `u`, adds a `K_4` on
//! fresh vertices `v_1..v_4` and joins `v_l` to every vertex of `U_l`. The
//! edge count is unchanged: `k` edges leave, `(k - 6) + 6` arrive.
//!
//! Cycles of `G` avoiding `u` survive. Each path in `G - u` between two
//! kept neighbours in the same part closes through one `v_l`; between
//! different parts it closes through any of the 5 paths joining two vertices
//! of `K_4`. The `K_4` adds 7 more. Hence
//! `C(H) >= C(G) - S + R + 4X + 7` with `S` the total weight, `R` the
//! weight kept after deletion and `X` the weight split across parts.

mod select;

pub use select::{
    deletion_guarantee, part_sizes, quadripartition_guarantee, select_deletion_set,
    select_deletion_set_seeded, select_quadripartition, select_quadripartition_seeded,
    DeletionChoice, Quadripartition, SelectionMethod, EXHAUSTIVE_LIMIT,
};

use crate::counting::{count_cycles_with, pair_weights, Count, CycleMethod};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Degree from which the surgery applies.
pub const MIN_REDUCIBLE_DEGREE: usize = 12;

/// Everything decided and measured in one surgery.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    /// The removed vertex (smallest index among those of maximum degree).
    pub u: usize,
    pub degree: usize,
    /// Neighbours of `u` in increasing order; selection indices refer here.
    pub neighbors: Vec<usize>,
    pub total_weight: Count,
    pub deletion: DeletionChoice,
    /// Partition of the kept neighbours, as indices into `neighbors`.
    pub partition: Quadripartition,
    pub before: Count,
    pub after: Count,
    pub graph: SimpleGraph,
}

impl ReductionStep {
    /// Vertices of `G` set aside.
    pub fn deleted_vertices(&self) -> Vec<usize> {
        self.deletion.d.iter().map(|&i| self.neighbors[i]).collect()
    }

    /// Vertices of `G` in each part.
    pub fn part_vertices(&self) -> [Vec<usize>; 4] {
        self.partition
            .parts
            .clone()
            .map(|p| p.into_iter().map(|i| self.neighbors[i]).collect())
    }

    /// `C(G) - S + R + 4X + 7`, the count the surgery is guaranteed to reach.
    pub fn accounted(&self) -> Count {
        &self.before - &self.total_weight
            + &self.deletion.retained
            + &self.partition.cross * 4u8
            + 7u8
    }
}

/// `H` for the vertex of maximum degree.
pub fn reduce_max_degree(g: &SimpleGraph) -> Result<SimpleGraph> {
    Ok(reduce_step(g, 0)?.graph)
}

/// One surgery with full diagnostics, checking every certificate and the
/// strict increase of the cycle count.
pub fn reduce_step(g: &SimpleGraph, seed: u64) -> Result<ReductionStep> {
    let delta = g.max_degree();
    if delta < MIN_REDUCIBLE_DEGREE {
        return Err(Error::Precondition(format!(
            "surgery needs maximum degree >= {MIN_REDUCIBLE_DEGREE}, got {delta}"
        )));
    }
    let u = (0..g.n()).find(|&v| g.degree(v) == delta).expect("max degree attained");
    let neighbors = g.neighbors(u).to_vec();
    let weights = pair_weights(g, u)?;
    let total_weight = weights.total();
    let deletion = select_deletion_set_seeded(&weights, seed)?;
    let kept: Vec<usize> = (0..neighbors.len()).filter(|i| !deletion.d.contains(i)).collect();
    let restricted = weights.restrict(&kept);
    let mut partition = select_quadripartition_seeded(&restricted, seed)?;
    partition.parts = partition.parts.map(|p| p.into_iter().map(|i| kept[i]).collect());
    if !deletion.certified() || !partition.certified() {
        return Err(Error::Invariant("selection below its guarantee".into()));
    }

    let graph = surgery(g, u, &neighbors, &partition.parts)?;
    let before = count_cycles_with(g, CycleMethod::Auto)?;
    let after = count_cycles_with(&graph, CycleMethod::Auto)?;
    let step = ReductionStep {
        u,
        degree: delta,
        neighbors,
        total_weight,
        deletion,
        partition,
        before,
        after,
        graph,
    };
    if step.graph.m() != g.m() {
        return Err(Error::Invariant("surgery changed the edge count".into()));
    }
    if step.after < step.accounted() || step.after <= step.before {
        return Err(Error::Invariant(format!(
            "surgery did not increase the cycle count: {} -> {}",
            step.before, step.after
        )));
    }
    Ok(step)
}

fn surgery(
    g: &SimpleGraph,
    u: usize,
    neighbors: &[usize],
    parts: &[Vec<usize>; 4],
) -> Result<SimpleGraph> {
    let rest = g.remove_vertex(u);
    let shift = |x: usize| if x > u { x - 1 } else { x };
    let base = rest.n();
    let v = |l: usize| base + l;
    let mut edges: Vec<(usize, usize)> = rest.edges().collect();
    for (l, part) in parts.iter().enumerate() {
        edges.extend(part.iter().map(|&i| (shift(neighbors[i]), v(l))));
    }
    for a in 0..4 {
        for b in a + 1..4 {
            edges.push((v(a), v(b)));
        }
    }
    SimpleGraph::from_edges(base + 4, edges)
}

/// Result of repeated surgery.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub graph: SimpleGraph,
    pub steps: Vec<ReductionStep>,
}

/// Applies [`reduce_step`] until the maximum degree is at most 11. At most
/// `m` steps are attempted.
pub fn reduce_to_bounded_degree(g: &SimpleGraph, seed: u64) -> Result<ReductionTrace> {
    let cap = g.m();
    let mut current = g.clone();
    let mut steps = Vec::new();
    while current.max_degree() >= MIN_REDUCIBLE_DEGREE {
        if steps.len() == cap {
            return Err(Error::StepCapExceeded(cap));
        }
        let step = reduce_step(&current, seed)?;
        current = step.graph.clone();
        steps.push(step);
    }
    Ok(ReductionTrace {
        graph: current,
        steps,
    })
}
