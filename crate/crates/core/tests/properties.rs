use cyclemax::bounds::{
    ahrens, max_product_partition, new_bound, vertex_cycle_bound, BoundParams,
};
use cyclemax::counting::{
    count_cycles, count_cycles_multi, count_cycles_subset_dp, cycles_through_vertex, pair_weights,
    Count, PairWeights,
};
use cyclemax::graph::{canonical_form, parse_graph6, parse_multigraph, to_graph6, to_multi_text};
use cyclemax::reduction::{select_deletion_set_seeded, select_quadripartition_seeded};
use cyclemax::{Multigraph, SimpleGraph};
use proptest::prelude::*;

fn simple_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.45), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            SimpleGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn multigraph(max_n: usize, max_mult: u64) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0..=max_mult, pairs).prop_map(move |mults| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let entries: Vec<_> = all.zip(mults).filter(|(_, k)| *k > 0).collect();
            Multigraph::from_multiplicities(n, entries).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn weights(k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PairWeights> {
    k.prop_flat_map(|k| {
        proptest::collection::vec(0u32..40, k * k.saturating_sub(1) / 2).prop_map(move |flat| {
            let mut it = flat.into_iter();
            PairWeights::from_fn(k, |_, _| Count::from(it.next().unwrap()))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in simple_graph(12)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn multi_text_round_trip(g in multigraph(6, 4)) {
        let text = to_multi_text(&g);
        prop_assert_eq!(to_multi_text(&parse_multigraph(&text).unwrap()), text);
    }

    #[test]
    fn handshake(g in simple_graph(10), h in multigraph(6, 4)) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
        let total: u64 = (0..h.n()).map(|v| h.degree(v)).sum();
        prop_assert_eq!(total, 2 * h.m());
    }

    #[test]
    fn relabelling_preserves_counts_and_canonical_form(
        (g, perm) in simple_graph(8).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })
    ) {
        let h = g.permute(&perm);
        prop_assert_eq!(count_cycles(&g), count_cycles(&h));
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_is_isomorphic(g in simple_graph(9)) {
        let form = canonical_form(&g).unwrap();
        let c = parse_graph6(std::str::from_utf8(&form).unwrap()).unwrap();
        prop_assert_eq!(c.n(), g.n());
        prop_assert_eq!(c.m(), g.m());
        prop_assert_eq!(count_cycles(&c), count_cycles(&g));
        let mut a: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut b: Vec<usize> = (0..c.n()).map(|v| c.degree(v)).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn ahrens_sandwich(g in simple_graph(9)) {
        let (lo, hi) = ahrens(g.n() as u64, g.m() as u64, g.components() as u64).unwrap();
        let c = count_cycles(&g);
        prop_assert!(lo <= c && c <= hi);
    }

    #[test]
    fn subset_program_matches_enumeration(g in simple_graph(10)) {
        prop_assert_eq!(count_cycles_subset_dp(&g).unwrap(), count_cycles(&g));
    }

    #[test]
    fn pair_weights_sum_to_cycles_through_vertex(g in simple_graph(10), pick in 0usize..10) {
        let u = pick % g.n();
        let w = pair_weights(&g, u).unwrap();
        prop_assert_eq!(w.k(), g.degree(u));
        let s = w.total();
        prop_assert_eq!(&s, &cycles_through_vertex(&g, u).unwrap());
        prop_assert_eq!(count_cycles(&g), count_cycles(&g.remove_vertex(u)) + s);
    }

    #[test]
    fn new_bound_holds_for_multigraphs(g in multigraph(5, 3)) {
        prop_assume!(g.m() <= 12);
        let p = BoundParams::for_multigraph(&g).unwrap();
        prop_assert!(new_bound(&p).unwrap().bounds_count_above(&count_cycles_multi(&g)));
    }

    #[test]
    fn vertex_bound_holds_at_maximum_degree(g in simple_graph(7)) {
        prop_assume!(g.n() >= 3);
        let u = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        let p = BoundParams::for_graph(&g).unwrap();
        let through = cycles_through_vertex(&g, u).unwrap();
        prop_assert!(vertex_cycle_bound(&p).unwrap().bounds_count_above(&through));
    }

    #[test]
    fn partition_product_never_beats_cube_root_three(m in 0u64..60) {
        let (p, _) = max_product_partition(m, u64::MAX);
        // p <= 3^(m/3)  <=>  p^3 <= 3^m
        prop_assert!(p.pow(3) <= Count::from(3u8).pow(m as u32));
        if m % 3 == 0 {
            prop_assert_eq!(p, Count::from(3u8).pow((m / 3) as u32));
        }
    }

    #[test]
    fn selections_meet_their_guarantees(w in weights(6..=16), seed in any::<u64>()) {
        let d = select_deletion_set_seeded(&w, seed).unwrap();
        prop_assert!(d.certified());
        let kept: Vec<usize> = (0..w.k()).filter(|i| !d.d.contains(i)).collect();
        if kept.len() >= 2 {
            let q = select_quadripartition_seeded(&w.restrict(&kept), seed).unwrap();
            prop_assert!(q.certified());
        }
    }

    #[test]
    fn simple_graphs_as_multigraphs(g in simple_graph(8)) {
        prop_assert_eq!(count_cycles_multi(&Multigraph::from_simple(&g)), count_cycles(&g));
    }
}
