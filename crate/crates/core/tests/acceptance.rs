//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use cyclemax::bounds::{corollary_bound, Real};
use cyclemax::constructions::{
    cnm_cycle_count, construct_cnm, construct_gn, enumerate_p, MultiCycleSpec,
};
use cyclemax::counting::{count_cycles, count_cycles_multi, Count};
use cyclemax::graph::canonical_form;
use cyclemax::reduction::reduce_step;
use cyclemax::search::{extremal_search, verify_bounds_on_corpus, SearchOptions};
use cyclemax::{Multigraph, SimpleGraph};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("tightness quartet", tightness_quartet),
        ("bound sandwich on connected graphs, n <= 7", bound_sandwich),
        ("extremal graphs with 7 edges", seven_edges),
        ("ladder path recurrence", ladder_recurrence),
        ("G_n cycle guarantee", gn_guarantee),
        ("degree-reduction surgery", reduction_improves),
        ("C_(n,m) closed form and lower bound", multicycle),
        ("naive oracle equivalence", oracle_equivalence),
        ("search prune soundness, 3 <= m <= 10", prune_soundness),
        ("corollary crossover at m = 4057", crossover),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges.iter().copied()).unwrap()
}

fn complete(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tightness_quartet() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("K3", complete(3), 1u32),
        ("K4", complete(4), 7),
        ("K4-e", graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]), 3),
        ("K33", SimpleGraph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap(), 15),
    ];
    let mut seen = Vec::new();
    for (name, g, expected) in &cases {
        let c = count_cycles(g);
        let cyclomatic = g.m() + 1 - g.n();
        let top = (BigUint::from(1u8) << cyclomatic) - 1u8;
        ensure(c == Count::from(*expected) && c == top, || {
            format!("{name}: counted {c}, expected {expected} = 2^{cyclomatic} - 1")
        })?;
        seen.push(format!("{name}={c}"));
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 1.0, || format!("took {secs:.3}s"))?;
    Ok(seen.join(" "))
}

fn bound_sandwich() -> Outcome {
    let report = verify_bounds_on_corpus(7).map_err(|e| e.to_string())?;
    ensure(report.violations.is_empty(), || {
        format!("{} violations, first {:?}", report.violations.len(), report.violations.first())
    })?;
    let profile: Vec<String> = report
        .tightness
        .iter()
        .map(|t| format!("{} max ratio {:.4}", t.bound, t.max_ratio))
        .collect();
    Ok(format!("{} graphs, 0 violations; {}", report.graphs_checked, profile.join(", ")))
}

fn canon(g: &SimpleGraph) -> Vec<u8> {
    canonical_form(g).unwrap()
}

fn seven_edges() -> Outcome {
    let r = extremal_search(7, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let pendant = graph(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
    let subdivided = graph(5, &[(0, 1), (0, 2), (0, 4), (4, 3), (1, 2), (1, 3), (2, 3)]);
    let expected: BTreeSet<Vec<u8>> = [canon(&pendant), canon(&subdivided)].into();
    let found: BTreeSet<Vec<u8>> = r.witnesses.iter().map(canon).collect();
    ensure(r.cmax == Count::from(7u8), || format!("cmax {}", r.cmax))?;
    ensure(found == expected && r.witnesses.len() == 2, || {
        format!("witnesses {:?}", r.witness_graph6())
    })?;
    Ok(format!("cmax=7, witnesses {:?}", r.witness_graph6()))
}

/// `(2 + 2 sqrt 2)^n` enclosed.
fn ladder_base_pow(n: u32) -> Real {
    let sqrt2 = Real::nth_root(&BigRational::from_integer(BigInt::from(2)), 2);
    let two = Real::from_int(2);
    two.add(&sqrt2.scale(&BigRational::from_integer(BigInt::from(2)))).pow(n)
}

fn ladder_recurrence() -> Outcome {
    let p: Vec<Count> = (1..=8).map(|n| enumerate_p(n).unwrap()).collect();
    for n in 3..=8usize {
        let (a, b, c) = (&p[n - 3], &p[n - 2], &p[n - 1]);
        ensure(*c == (a + b) * 4u8, || format!("P({n}) = {c} but 4(P({}) + P({})) = {}", n - 1, n - 2, (a + b) * 4u8))?;
    }
    for n in 1..=8u32 {
        let bound = ladder_base_pow(n);
        let pn = &p[n as usize - 1];
        ensure(bound.bounds_count_below(pn), || {
            format!("P({n}) = {pn} below (2+2sqrt2)^{n} ~ {}", bound.upper_decimal(3))
        })?;
    }
    let shown: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    Ok(format!("P(1..8) = {}", shown.join(", ")))
}

fn gn_guarantee() -> Outcome {
    let mut shown = Vec::new();
    for n in 3..=6u32 {
        let g = construct_gn(n as usize).map_err(|e| e.to_string())?;
        let c = count_cycles(&g);
        let bound = ladder_base_pow(n);
        let ceiling = bound.ceil_upper();
        ensure(ceiling == bound.ceil_lower(), || format!("enclosure straddles an integer at n={n}"))?;
        ensure(c >= ceiling, || format!("C(G_{n}) = {c} < {ceiling}"))?;
        shown.push(format!("C(G_{n})={c}>={ceiling}"));
    }
    let g12 = construct_gn(12).map_err(|e| e.to_string())?;
    ensure((g12.n(), g12.m()) == (25, 61), || format!("G_12 has {} vertices, {} edges", g12.n(), g12.m()))?;
    Ok(format!("{}; G_12 has 25 vertices, 61 edges", shown.join(" ")))
}

/// A graph on at most 18 vertices whose vertex 0 has degree `delta` and is
/// the unique maximum, with sparse random edges elsewhere.
fn high_degree_graph(rng: &mut ChaCha8Rng) -> SimpleGraph {
    loop {
        let delta = rng.gen_range(12..=15);
        let n = rng.gen_range(delta + 1..=18);
        let p = rng.gen_range(0.08..0.18);
        let mut others: Vec<usize> = (1..n).collect();
        others.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = others[..delta].iter().map(|&v| (0, v)).collect();
        for u in 1..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, edges).unwrap();
        if g.max_degree() == delta && (1..n).all(|v| g.degree(v) < delta) {
            return g;
        }
    }
}

fn reduction_improves() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut gains = Vec::new();
    for trial in 0..50 {
        let g = high_degree_graph(&mut rng);
        let step = reduce_step(&g, trial).map_err(|e| format!("graph {trial}: {e}"))?;
        let h = &step.graph;
        ensure(h.m() == g.m(), || format!("graph {trial}: edges {} -> {}", g.m(), h.m()))?;
        let (before, after) = (count_cycles(&g), count_cycles(h));
        ensure(before == step.before && after == step.after, || {
            format!("graph {trial}: recount disagrees with the surgery report")
        })?;
        ensure(after > before, || format!("graph {trial}: {before} -> {after}"))?;
        ensure(step.deletion.certified() && step.partition.certified(), || {
            format!("graph {trial}: certificate below guarantee")
        })?;
        // independent check of the certificates against the raw weights
        let w = cyclemax::counting::pair_weights(&g, step.u).unwrap();
        let k = w.k() as i64;
        let s = BigRational::from_integer(BigInt::from(w.total()));
        let kept: Vec<usize> = (0..w.k()).filter(|i| !step.deletion.d.contains(i)).collect();
        let retained: Count = pairs(&kept).map(|(a, b)| w.get(a, b).clone()).sum();
        let deletion_floor = &s * BigRational::new(((k - 6) * (k - 7)).into(), (k * (k - 1)).into());
        ensure(retained == step.deletion.retained && ratio(&retained) >= deletion_floor, || {
            format!("graph {trial}: deletion certificate")
        })?;
        let k2 = kept.len() as i64;
        let cross: Count = pairs(&kept)
            .filter(|&(a, b)| !step.partition.parts.iter().any(|p| p.contains(&a) && p.contains(&b)))
            .map(|(a, b)| w.get(a, b).clone())
            .sum();
        let cross_floor = ratio(&retained) * BigRational::new((3 * k2 * k2 - 4).into(), (4 * k2 * (k2 - 1)).into());
        ensure(cross == step.partition.cross && ratio(&cross) >= cross_floor, || {
            format!("graph {trial}: partition certificate")
        })?;
        let sizes: Vec<usize> = step.partition.parts.iter().map(Vec::len).collect();
        let want: Vec<usize> = (1..=4).map(|l| (kept.len() + l - 1) / 4).collect();
        ensure(sizes == want, || format!("graph {trial}: part sizes {sizes:?}"))?;
        gains.push(after - before);
    }
    let least = gains.iter().min().unwrap();
    Ok(format!("50/50 graphs improved, smallest gain {least}"))
}

fn pairs(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    v.iter()
        .enumerate()
        .flat_map(move |(x, &a)| v[x + 1..].iter().map(move |&b| (a, b)))
}

fn ratio(c: &Count) -> BigRational {
    BigRational::from_integer(BigInt::from(c.clone()))
}

fn multicycle() -> Outcome {
    let mut checked = 0;
    for n in 2..=6usize {
        for m in n as u64..=18 {
            let spec = MultiCycleSpec::new(n, m).unwrap();
            let closed = cnm_cycle_count(&spec);
            let counted = count_cycles_multi(&construct_cnm(&spec).unwrap());
            ensure(closed == counted, || format!("n={n} m={m}: closed form {closed}, counted {counted}"))?;
            checked += 1;
        }
    }
    for m in 9..=18u64 {
        let spec = MultiCycleSpec::new(((m + 1) / 3) as usize, m).unwrap();
        let c = cnm_cycle_count(&spec);
        let three = BigRational::from_integer(BigInt::from(3));
        let lower = Real::pow_ratio(&three, m as i64 - 4, 3).scale(&BigRational::from_integer(BigInt::from(4)));
        ensure(lower.bounds_count_below(&c), || {
            format!("m={m}: {c} below 4*3^((m-4)/3) ~ {}", lower.upper_decimal(4))
        })?;
    }
    Ok(format!("{checked} (n, m) pairs agree; lower bound holds for m = 9..18"))
}

/// Cycles by brute force over edge subsets: a subset is a cycle when it is
/// connected and every vertex it touches has degree exactly two in it.
fn subset_is_cycle(edges: &[(usize, usize)], subset: u64, n: usize) -> bool {
    if subset.count_ones() < 2 {
        return false;
    }
    let mut degree = vec![0u32; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        if subset >> i & 1 == 1 {
            degree[a] += 1;
            degree[b] += 1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    if degree.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let mut roots = (0..n).filter(|&v| degree[v] > 0).map(|v| find(&mut parent, v));
    let first = roots.next().unwrap();
    roots.all(|r| r == first)
}

fn oracle_equivalence() -> Outcome {
    // Simple graphs: every labelled graph on n <= 6 vertices, against the
    // cycles of K_n found by brute force over edge subsets.
    let mut graphs = 0u64;
    for n in 1..=6usize {
        let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let cycles: Vec<u64> = (0u64..1 << all.len())
            .filter(|&s| subset_is_cycle(&all, s, n))
            .collect();
        for mask in 0u64..1 << all.len() {
            let edges: Vec<(usize, usize)> = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            let expected = cycles.iter().filter(|&&c| c & !mask == 0).count();
            let got = count_cycles(&g);
            ensure(got == Count::from(expected), || format!("n={n} mask={mask:b}: {got} vs {expected}"))?;
            graphs += 1;
        }
    }
    // Multigraphs: every parallel edge listed separately.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..200 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=10);
        let mut flat = Vec::new();
        while flat.len() < m {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                flat.push((a.min(b), a.max(b)));
            }
        }
        let mut mult = std::collections::BTreeMap::new();
        for &e in &flat {
            *mult.entry(e).or_insert(0u64) += 1;
        }
        let g = Multigraph::from_multiplicities(n, mult).unwrap();
        let expected = (0u64..1 << flat.len()).filter(|&s| subset_is_cycle(&flat, s, n)).count();
        let got = count_cycles_multi(&g);
        ensure(got == Count::from(expected), || format!("multigraph {trial}: {got} vs {expected}"))?;
    }
    Ok(format!("{graphs} labelled graphs and 200 multigraphs agree"))
}

fn prune_soundness() -> Outcome {
    let mut shown = Vec::new();
    for m in 3..=10 {
        let pruned = extremal_search(m, &SearchOptions::default()).map_err(|e| e.to_string())?;
        let plain = extremal_search(m, &SearchOptions::unpruned()).map_err(|e| e.to_string())?;
        let a: BTreeSet<Vec<u8>> = pruned.witnesses.iter().map(canon).collect();
        let b: BTreeSet<Vec<u8>> = plain.witnesses.iter().map(canon).collect();
        ensure(pruned.cmax == plain.cmax && a == b, || {
            format!(
                "m={m}: pruned {} {:?}, unpruned {} {:?}",
                pruned.cmax,
                pruned.witness_graph6(),
                plain.cmax,
                plain.witness_graph6()
            )
        })?;
        shown.push(format!("C({m})={}", pruned.cmax));
    }
    Ok(shown.join(" "))
}

fn crossover() -> Outcome {
    // Independent integer check: 8.25 3^(m/3) < 1.443^m iff
    // 33^3 3^m 1000^(3m) < 64 1443^(3m).
    let exact = |m: u32| {
        BigUint::from(35937u32) * BigUint::from(3u8).pow(m) * BigUint::from(1000u32).pow(3 * m)
            < BigUint::from(64u8) * BigUint::from(1443u32).pow(3 * m)
    };
    let at = |m: u64| corollary_bound(m).implies_power_bound;
    ensure(!at(4056) && at(4057), || format!("4056: {}, 4057: {}", at(4056), at(4057)))?;
    ensure(!exact(4056) && exact(4057), || "integer check disagrees".into())?;
    Ok("8.25*3^(m/3) < 1.443^m holds at m=4057 and fails at m=4056".into())
}
