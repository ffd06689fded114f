//! Exhaustive search for the largest number of cycles among graphs with a
//! given number of edges, and exhaustive bound checks on small graphs.
//!
//! A maximiser can be taken connected: cycles never span components, so
//! merging two components at a vertex keeps every cycle. Leaves carry no
//! cycle, so when more than a handful of edges are involved the default
//! space is connected graphs of minimum degree two. For small edge counts
//! the search covers every connected graph, which also catches extremal
//! graphs with pendant edges, and the maximum is checked against the
//! maximum over all graphs (sums of connected maxima over the partitions of
//! the edge count).

mod generate;

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bounds::BoundReport;
use crate::counting::{count_cycles, Count};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, SimpleGraph, DEFAULT_CANON_LIMIT};
use generate::{first_level, next_level, Filters, Key};

/// Edge counts accepted by [`extremal_search`].
pub const MIN_SEARCH_EDGES: usize = 3;
pub const MAX_SEARCH_EDGES: usize = 14;

/// Up to this many edges the search space is every connected graph.
pub const FULL_SPACE_EDGES: usize = 8;

/// Maximum degree allowed by the degree-reduction prune.
pub const PRUNE_MAX_DEGREE: usize = 11;

/// Which graphs are searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchSpace {
    /// Every connected graph.
    Connected,
    /// Connected graphs with minimum degree at least two.
    MinDegreeTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// `None` picks [`SearchSpace::Connected`] up to
    /// [`FULL_SPACE_EDGES`] edges and [`SearchSpace::MinDegreeTwo`] above.
    pub space: Option<SearchSpace>,
    /// Discard graphs with a vertex of degree above 11.
    pub prune_max_degree: bool,
    /// For more than 7 edges, keep only graphs of minimum degree three.
    pub prune_min_degree: bool,
    /// Compare against the maximum over all graphs (up to
    /// [`FULL_SPACE_EDGES`] edges).
    pub cross_check: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            space: None,
            prune_max_degree: true,
            prune_min_degree: true,
            cross_check: true,
        }
    }
}

impl SearchOptions {
    pub fn unpruned() -> Self {
        SearchOptions {
            prune_max_degree: false,
            prune_min_degree: false,
            ..Self::default()
        }
    }
}

/// Which prunes were in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrunesApplied {
    pub max_degree: bool,
    pub min_degree_three: bool,
}

#[derive(Clone, Debug)]
pub struct ExtremalResult {
    pub m: usize,
    pub cmax: Count,
    /// Canonical representatives, sorted by graph6.
    pub witnesses: Vec<SimpleGraph>,
    pub space: SearchSpace,
    /// Smallest and largest vertex count among the graphs compared.
    pub n_range_searched: (usize, usize),
    pub prunes_applied: PrunesApplied,
    /// Canonical graphs kept at each edge count `1..=m`.
    pub level_sizes: Vec<usize>,
    /// Children examined over the whole run.
    pub nodes_examined: u64,
    /// The maximum over all graphs with `m` edges, when checked.
    pub all_graphs_max: Option<Count>,
    pub seconds: f64,
}

impl ExtremalResult {
    pub fn witness_graph6(&self) -> Vec<String> {
        self.witnesses.iter().map(to_graph6).collect()
    }
}

/// Exact maximum number of cycles over graphs with `m` edges.
pub fn extremal_search(m: usize, opts: &SearchOptions) -> Result<ExtremalResult> {
    if !(MIN_SEARCH_EDGES..=MAX_SEARCH_EDGES).contains(&m) {
        return Err(Error::Capacity(format!(
            "search covers {MIN_SEARCH_EDGES}..={MAX_SEARCH_EDGES} edges, got {m}"
        )));
    }
    let start = Instant::now();
    let space = opts.space.unwrap_or(if m <= FULL_SPACE_EDGES {
        SearchSpace::Connected
    } else {
        SearchSpace::MinDegreeTwo
    });
    let min_degree_three = opts.prune_min_degree && m > 7;
    let prunes = PrunesApplied {
        max_degree: opts.prune_max_degree,
        min_degree_three,
    };
    let min_degree = if min_degree_three {
        3
    } else if space == SearchSpace::MinDegreeTwo {
        2
    } else {
        0
    };
    let filters = Filters {
        target_edges: m,
        // connected: n <= m + 1; minimum degree d: n <= 2m/d
        max_vertices: match min_degree {
            0 => m + 1,
            d => 2 * m / d,
        }
        .min(DEFAULT_CANON_LIMIT),
        min_degree,
        max_degree: opts.prune_max_degree.then_some(PRUNE_MAX_DEGREE),
    };
    let mut level = first_level();
    let mut level_sizes = vec![level.len()];
    let mut nodes = 1u64;
    for e in 1..m {
        let (next, examined) = next_level(&level, e, &filters);
        nodes += examined;
        level = next;
        level_sizes.push(level.len());
    }
    let finals: Vec<&Key> = level
        .iter()
        .filter(|adj| adj.iter().all(|row| row.count_ones() as usize >= min_degree))
        .collect();
    let counted: Vec<(u128, &Key)> = finals
        .par_iter()
        .map(|&adj| (crate::counting::count_cycles_masks(adj), adj))
        .collect();
    let best = counted.iter().map(|(c, _)| *c).max().unwrap_or(0);
    let mut witnesses: Vec<SimpleGraph> = counted
        .iter()
        .filter(|(c, _)| *c == best)
        .map(|(_, adj)| SimpleGraph::from_masks(adj))
        .collect();
    witnesses.sort_by_key(to_graph6);
    let n_range = finals
        .iter()
        .map(|a| a.len())
        .fold((usize::MAX, 0), |(lo, hi), n| (lo.min(n), hi.max(n)));
    let n_range = if finals.is_empty() { (0, 0) } else { n_range };

    let cmax = Count::from(best);
    let all_graphs_max = if opts.cross_check && m <= FULL_SPACE_EDGES {
        let all = all_graphs_maximum(m);
        if all != cmax {
            return Err(Error::Invariant(format!(
                "restricted search found {cmax} cycles, all graphs reach {all}"
            )));
        }
        Some(all)
    } else {
        None
    };
    Ok(ExtremalResult {
        m,
        cmax,
        witnesses,
        space,
        n_range_searched: n_range,
        prunes_applied: prunes,
        level_sizes,
        nodes_examined: nodes,
        all_graphs_max,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Maximum number of cycles of a connected graph with `j` edges, for
/// `j = 0..=m` (index 0 is the single vertex).
pub fn connected_maxima(m: usize) -> Vec<Count> {
    let filters = Filters {
        target_edges: m,
        max_vertices: (m + 1).min(DEFAULT_CANON_LIMIT),
        min_degree: 0,
        max_degree: None,
    };
    let mut out = vec![Count::zero()];
    if m == 0 {
        return out;
    }
    let mut level = first_level();
    out.push(Count::zero());
    for e in 1..m {
        level = next_level(&level, e, &filters).0;
        let best = level
            .par_iter()
            .map(|adj| crate::counting::count_cycles_masks(adj))
            .max()
            .unwrap_or(0);
        out.push(Count::from(best));
    }
    out
}

/// Maximum number of cycles over all graphs with `m` edges: the best way to
/// split the edges among connected components.
pub fn all_graphs_maximum(m: usize) -> Count {
    let conn = connected_maxima(m);
    let mut best = vec![Count::zero(); m + 1];
    for total in 1..=m {
        for first in 1..=total {
            let candidate = &conn[first] + &best[total - first];
            if candidate > best[total] {
                best[total] = candidate;
            }
        }
    }
    best[m].clone()
}

/// Every connected graph with `2..=nmax` vertices, one per isomorphism class.
pub fn connected_graphs_up_to(nmax: usize) -> Result<Vec<SimpleGraph>> {
    if !(1..=8).contains(&nmax) {
        return Err(Error::Capacity(format!("corpus limited to 1..=8 vertices, got {nmax}")));
    }
    let mut out = Vec::new();
    if nmax < 2 {
        return Ok(out);
    }
    let max_edges = nmax * (nmax - 1) / 2;
    let filters = Filters {
        target_edges: max_edges,
        max_vertices: nmax,
        min_degree: 0,
        max_degree: None,
    };
    let mut level = first_level();
    for e in 1..=max_edges {
        out.extend(level.iter().map(|adj| SimpleGraph::from_masks(adj)));
        if e < max_edges {
            level = next_level(&level, e, &filters).0;
        }
    }
    Ok(out)
}

/// Largest observed count-to-bound ratio for one bound.
#[derive(Clone, Debug)]
pub struct Tightness {
    pub bound: &'static str,
    pub max_ratio: f64,
    /// Exact maximum ratio when the bound is rational.
    pub exact_max_ratio: Option<BigRational>,
    /// graph6 of every graph attaining the maximum.
    pub attained_by: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub nmax: usize,
    pub graphs_checked: usize,
    /// `(graph6, bound name)` for each failure.
    pub violations: Vec<(String, &'static str)>,
    pub tightness: Vec<Tightness>,
}

struct Checked {
    g6: String,
    ahrens: Option<BigRational>,
    aldred: Option<BigRational>,
    new: Option<f64>,
    violations: Vec<&'static str>,
}

/// Counts the cycles of every connected graph with at most `nmax` vertices
/// and compares them with the cyclomatic bounds (both sides), the
/// connected-graph refinement and the vertex-edge-degree bound.
pub fn verify_bounds_on_corpus(nmax: usize) -> Result<CorpusReport> {
    let graphs = connected_graphs_up_to(nmax)?;
    let checked: Vec<Checked> = graphs
        .par_iter()
        .map(|g| -> Result<Checked> {
            let c = count_cycles(g);
            let report = BoundReport::for_graph(g)?;
            let cq = BigRational::from_integer(BigInt::from(c.clone()));
            let ahrens = report.ahrens.as_ref().and_then(|(_, hi)| {
                (!hi.is_zero()).then(|| &cq / BigRational::from_integer(BigInt::from(hi.clone())))
            });
            let aldred = report.aldred_thomassen.as_ref().map(|b| &cq / b);
            let new = report.new_bound.as_ref().and_then(|b| {
                let v = b.to_f64();
                (v > 0.0).then(|| crate::bounds::Real::from_count(&c).to_f64() / v)
            });
            // The edge-only bound is not part of this corpus check.
            let violations = report
                .violations(&c)
                .into_iter()
                .filter(|&v| v != "corollary")
                .collect();
            Ok(Checked {
                g6: to_graph6(g),
                ahrens,
                aldred,
                new,
                violations,
            })
        })
        .collect::<Result<_>>()?;

    let violations = checked
        .iter()
        .flat_map(|c| c.violations.iter().map(move |&v| (c.g6.clone(), v)))
        .collect();
    let exact = |name: &'static str, pick: fn(&Checked) -> Option<BigRational>| {
        let max = checked.iter().filter_map(pick).max();
        let attained_by = match &max {
            Some(mx) => checked
                .iter()
                .filter(|c| pick(c).as_ref() == Some(mx))
                .map(|c| c.g6.clone())
                .collect(),
            None => Vec::new(),
        };
        Tightness {
            bound: name,
            max_ratio: max.as_ref().map_or(0.0, crate::bounds::ratio_to_f64),
            exact_max_ratio: max,
            attained_by,
        }
    };
    let ahrens = exact("ahrens.hi", |c| c.ahrens.clone());
    let aldred = exact("aldred_thomassen", |c| c.aldred.clone());
    let new_max = checked.iter().filter_map(|c| c.new).fold(0.0, f64::max);
    let new = Tightness {
        bound: "new",
        max_ratio: new_max,
        exact_max_ratio: None,
        attained_by: checked
            .iter()
            .filter(|c| c.new == Some(new_max))
            .map(|c| c.g6.clone())
            .collect(),
    };
    Ok(CorpusReport {
        nmax,
        graphs_checked: graphs.len(),
        violations,
        tightness: vec![ahrens, aldred, new],
    })
}
