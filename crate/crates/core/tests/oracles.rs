use std::collections::BTreeSet;

use cyclemax::bounds::{multigraph_bounds, BoundParams};
use cyclemax::constructions::{construct_lower_bound_graph, path_count_p};
use cyclemax::counting::{count_cycles, count_paths, Count};
use cyclemax::graph::canonical_form;
use cyclemax::search::{
    connected_graphs_up_to, extremal_search, verify_bounds_on_corpus, SearchOptions, SearchSpace,
};
use cyclemax::SimpleGraph;

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for x in start..=n - (k - cur.len()) {
            cur.push(x);
            go(n, k, x + 1, cur, f);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), &mut f);
}

/// Maximum cycle count over every `m`-edge subgraph of `K_m`, with the
/// canonical forms of the connected maximisers (isolated vertices dropped).
fn brute_force_extremal(m: usize) -> (Count, BTreeSet<Vec<u8>>) {
    let all: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let mut best = Count::from(0u8);
    let mut witnesses = BTreeSet::new();
    combinations(all.len(), m, |pick| {
        let g = SimpleGraph::from_edges(m, pick.iter().map(|&i| all[i])).unwrap();
        let c = count_cycles(&g);
        if c < best {
            return;
        }
        if c > best {
            best = c.clone();
            witnesses.clear();
        }
        // Drop isolated vertices, then keep it if connected.
        let used: Vec<usize> = (0..m).filter(|&v| g.degree(v) > 0).collect();
        let index = |v: usize| used.binary_search(&v).unwrap();
        let core = SimpleGraph::from_edges(used.len(), g.edges().map(|(a, b)| (index(a), index(b)))).unwrap();
        if core.is_connected() {
            witnesses.insert(canonical_form(&core).unwrap());
        }
    });
    (best, witnesses)
}

#[test]
fn search_matches_brute_force() {
    for m in 3..=7 {
        let (best, witnesses) = brute_force_extremal(m);
        let r = extremal_search(m, &SearchOptions::default()).unwrap();
        assert_eq!(r.cmax, best, "m={m}");
        let found: BTreeSet<Vec<u8>> = r.witnesses.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(found, witnesses, "m={m}");
        assert_eq!(r.all_graphs_max.as_ref(), Some(&best));
    }
}

#[test]
fn witnesses_recount_and_are_distinct() {
    for m in [8, 9, 10] {
        let r = extremal_search(m, &SearchOptions::default()).unwrap();
        let forms: BTreeSet<Vec<u8>> = r.witnesses.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), r.witnesses.len());
        for g in &r.witnesses {
            assert_eq!(g.m(), m);
            assert_eq!(count_cycles(g), r.cmax);
        }
    }
}

#[test]
fn minimum_degree_two_space_agrees_on_the_maximum() {
    for m in 3..=8 {
        let full = extremal_search(m, &SearchOptions::unpruned()).unwrap();
        let opts = SearchOptions {
            space: Some(SearchSpace::MinDegreeTwo),
            ..SearchOptions::unpruned()
        };
        let core = extremal_search(m, &opts).unwrap();
        assert_eq!(full.cmax, core.cmax, "m={m}");
        for g in &core.witnesses {
            assert!((0..g.n()).all(|v| g.degree(v) >= 2));
        }
    }
}

#[test]
fn connected_graph_counts_by_order() {
    // Connected graphs on 2..=7 vertices up to isomorphism.
    let per_order = [1, 2, 6, 21, 112, 853];
    let graphs = connected_graphs_up_to(7).unwrap();
    for (i, &expected) in per_order.iter().enumerate() {
        let n = i + 2;
        assert_eq!(graphs.iter().filter(|g| g.n() == n).count(), expected, "n={n}");
    }
}

#[test]
fn corpus_tightness_includes_k33() {
    let r = verify_bounds_on_corpus(6).unwrap();
    assert!(r.violations.is_empty());
    let k33 = SimpleGraph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
    let target = canonical_form(&k33).unwrap();
    let ahrens = &r.tightness[0];
    assert!(ahrens
        .attained_by
        .iter()
        .any(|g6| canonical_form(&cyclemax::graph::parse_graph6(g6).unwrap()).unwrap() == target));
    let r5 = verify_bounds_on_corpus(5).unwrap();
    assert!(r5.violations.iter().all(|(_, b)| *b != "aldred_thomassen"));
}

#[test]
fn multigraph_bounds_are_ordered_on_a_grid() {
    for n in 2..=10u64 {
        for m in 3..=30u64 {
            let s = BoundParams::new(n, m, 0).unwrap().s;
            for delta in s.max(2)..=s.max(2) + 3 {
                let b = multigraph_bounds(n, m, delta).unwrap();
                for pair in b.branches() {
                    assert!(pair.lo.upper() < pair.hi.lower(), "n={n} m={m} delta={delta}");
                }
            }
        }
    }
}

#[test]
fn ladder_paths_by_independent_enumeration() {
    // Paths u_1 -> u_3 in H_2, counted by a plain recursive search.
    let h = cyclemax::constructions::construct_hn(2).unwrap();
    fn paths(g: &SimpleGraph, v: usize, t: usize, seen: &mut Vec<bool>) -> u64 {
        if v == t {
            return 1;
        }
        let mut total = 0;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                total += paths(g, w, t, seen);
                seen[w] = false;
            }
        }
        total
    }
    let mut seen = vec![false; h.n()];
    seen[0] = true;
    let direct = paths(&h, 0, 2, &mut seen);
    assert_eq!(Count::from(direct), path_count_p(2).unwrap());
    assert_eq!(count_paths(&h, 0, 2).unwrap(), Count::from(direct));
}

#[test]
fn lower_bound_graph_keeps_cycle_count() {
    let base = count_cycles(&construct_lower_bound_graph(16).unwrap());
    for m in 17..=20 {
        assert_eq!(count_cycles(&construct_lower_bound_graph(m).unwrap()), base);
    }
}
