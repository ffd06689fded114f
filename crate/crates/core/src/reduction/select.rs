//! Certified selections over pair weights.
//!
//! Both selections have an averaging guarantee: a uniformly random choice
//! achieves it in expectation. Small instances are solved exhaustively;
//! larger ones use local search with seeded restarts and, as a last resort,
//! the method of conditional expectations, which meets the average by
//! construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::counting::{Count, PairWeights};
use crate::error::{Error, Result};

/// Candidate-count limit for exhaustive selection.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

const RESTARTS: usize = 64;

/// How a selection was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionMethod {
    Exhaustive,
    LocalSearch,
    Restarts,
    ConditionalExpectation,
}

/// Six neighbour indices to drop, and the pair weight that survives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionChoice {
    /// Sorted indices into the pair weights.
    pub d: [usize; 6],
    /// Weight of pairs with neither index in `d`.
    pub retained: Count,
    /// `(k-6)(k-7)/(k(k-1)) S`.
    pub guarantee: BigRational,
    pub method: SelectionMethod,
}

impl DeletionChoice {
    pub fn certified(&self) -> bool {
        ratio(&self.retained) >= self.guarantee
    }
}

/// A split of the indices into four parts of prescribed sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadripartition {
    /// Sorted parts with sizes `floor((k + l - 1)/4)` for `l = 1..=4`.
    pub parts: [Vec<usize>; 4],
    /// Weight of pairs split between parts.
    pub cross: Count,
    /// `(3k^2 - 4)/(4k(k-1)) S`.
    pub guarantee: BigRational,
    pub method: SelectionMethod,
}

impl Quadripartition {
    pub fn certified(&self) -> bool {
        ratio(&self.cross) >= self.guarantee
    }
}

fn ratio(c: &Count) -> BigRational {
    BigRational::from_integer(BigInt::from(c.clone()))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn deletion_guarantee(k: usize, s: &Count) -> BigRational {
    let k = k as i64;
    ratio(s) * BigRational::new(((k - 6) * (k - 7)).into(), (k * (k - 1)).into())
}

pub fn quadripartition_guarantee(k: usize, s: &Count) -> BigRational {
    let k = k as i64;
    ratio(s) * BigRational::new((3 * k * k - 4).into(), (4 * k * (k - 1)).into())
}

/// Part sizes `floor((k + l - 1)/4)`, `l = 1..=4`.
pub fn part_sizes(k: usize) -> [usize; 4] {
    [k / 4, (k + 1) / 4, (k + 2) / 4, (k + 3) / 4]
}

/// Dense symmetric weight matrix.
struct Matrix {
    k: usize,
    w: Vec<Count>,
}

impl Matrix {
    fn new(w: &PairWeights) -> Self {
        let k = w.k();
        let mut flat = vec![Count::zero(); k * k];
        for i in 0..k {
            for j in 0..k {
                flat[i * k + j] = w.get(i, j).clone();
            }
        }
        Matrix { k, w: flat }
    }

    fn get(&self, i: usize, j: usize) -> &Count {
        &self.w[i * self.k + j]
    }

    fn vertex(&self, i: usize) -> Count {
        (0..self.k).map(|j| self.get(i, j)).sum()
    }

    /// Weight lost by deleting `d`: every pair touching it.
    fn deletion_loss(&self, d: &[usize]) -> Count {
        let touching: Count = d.iter().map(|&i| self.vertex(i)).sum();
        let inside: Count = pairs(d).map(|(a, b)| self.get(a, b)).sum();
        touching - inside
    }

    fn within(&self, part: &[usize]) -> Count {
        pairs(part).map(|(a, b)| self.get(a, b)).sum()
    }
}

fn pairs(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    v.iter()
        .enumerate()
        .flat_map(move |(x, &a)| v[x + 1..].iter().map(move |&b| (a, b)))
}

/// Six indices whose removal keeps the most pair weight.
pub fn select_deletion_set(w: &PairWeights) -> Result<DeletionChoice> {
    select_deletion_set_seeded(w, 0)
}

pub fn select_deletion_set_seeded(w: &PairWeights, seed: u64) -> Result<DeletionChoice> {
    let k = w.k();
    if k < 6 {
        return Err(Error::Domain(format!("deletion set needs k >= 6, got {k}")));
    }
    let m = Matrix::new(w);
    let total = w.total();
    let guarantee = deletion_guarantee(k, &total);
    let finish = |d: Vec<usize>, method| {
        let mut sorted = d;
        sorted.sort_unstable();
        let retained = &total - m.deletion_loss(&sorted);
        DeletionChoice {
            d: sorted.try_into().expect("six indices"),
            retained,
            guarantee: guarantee.clone(),
            method,
        }
    };
    if binomial(k as u128, 6) <= EXHAUSTIVE_LIMIT {
        return Ok(finish(exhaustive_deletion(&m), SelectionMethod::Exhaustive));
    }
    let weights: Vec<Count> = (0..k).map(|i| m.vertex(i)).collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let start: Vec<usize> = order[..6].to_vec();
    let choice = finish(improve_deletion(&m, start), SelectionMethod::LocalSearch);
    if choice.certified() {
        return Ok(choice);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESTARTS {
        let mut idx: Vec<usize> = (0..k).collect();
        idx.shuffle(&mut rng);
        let choice = finish(improve_deletion(&m, idx[..6].to_vec()), SelectionMethod::Restarts);
        if choice.certified() {
            return Ok(choice);
        }
    }
    let choice = finish(expected_deletion(&m), SelectionMethod::ConditionalExpectation);
    if choice.certified() {
        Ok(choice)
    } else {
        Err(Error::Invariant("deletion set below its averaging guarantee".into()))
    }
}

/// Lexicographically first 6-subset with minimum loss.
fn exhaustive_deletion(m: &Matrix) -> Vec<usize> {
    let k = m.k;
    let vertex: Vec<Count> = (0..k).map(|i| m.vertex(i)).collect();
    let best = (0..=k - 6)
        .into_par_iter()
        .filter_map(|first| {
            let mut best: Option<(Count, [usize; 6])> = None;
            let mut d = [first, 0, 0, 0, 0, 0];
            fn go(
                m: &Matrix,
                vertex: &[Count],
                d: &mut [usize; 6],
                depth: usize,
                loss: Count,
                best: &mut Option<(Count, [usize; 6])>,
            ) {
                if depth == 6 {
                    if best.as_ref().map_or(true, |(b, _)| &loss < b) {
                        *best = Some((loss, *d));
                    }
                    return;
                }
                for x in d[depth - 1] + 1..=m.k - (6 - depth) {
                    let inside: Count = d[..depth].iter().map(|&a| m.get(a, x)).sum();
                    d[depth] = x;
                    // touching weight added, then pairs already counted twice removed
                    let next = &loss + &vertex[x] - inside;
                    go(m, vertex, d, depth + 1, next, best);
                }
            }
            go(m, &vertex, &mut d, 1, vertex[first].clone(), &mut best);
            best
        })
        .reduce_with(|a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
        .expect("k >= 6 has a subset");
    best.1.to_vec()
}

/// Best-improvement swaps until no swap lowers the loss.
fn improve_deletion(m: &Matrix, mut d: Vec<usize>) -> Vec<usize> {
    let mut loss = m.deletion_loss(&d);
    loop {
        let mut best: Option<(Count, usize, usize)> = None;
        for pos in 0..d.len() {
            for x in 0..m.k {
                if d.contains(&x) {
                    continue;
                }
                let mut trial = d.clone();
                trial[pos] = x;
                let l = m.deletion_loss(&trial);
                if l < loss && best.as_ref().map_or(true, |(b, _, _)| &l < b) {
                    best = Some((l, pos, x));
                }
            }
        }
        match best {
            Some((l, pos, x)) => {
                d[pos] = x;
                loss = l;
            }
            None => return d,
        }
    }
}

/// Derandomised uniform choice: decide each index in turn, keeping the
/// conditional expectation of the retained weight from dropping.
fn expected_deletion(m: &Matrix) -> Vec<usize> {
    let k = m.k;
    // state: 0 free, 1 deleted, 2 kept
    let mut state = vec![0u8; k];
    let mut chosen = 0usize;
    let expectation = |state: &[u8], chosen: usize| -> BigRational {
        let free = state.iter().filter(|&&s| s == 0).count() as i64;
        let need = (6 - chosen) as i64;
        let survive = |s: u8| -> BigRational {
            match s {
                2 => BigRational::from_integer(1.into()),
                1 => BigRational::zero(),
                _ => BigRational::new((free - need).into(), free.max(1).into()),
            }
        };
        let both_free = if free >= 2 {
            BigRational::new(((free - need) * (free - need - 1)).into(), (free * (free - 1)).into())
        } else {
            BigRational::zero()
        };
        let mut e = BigRational::zero();
        for i in 0..k {
            for j in i + 1..k {
                let w = m.get(i, j);
                if w.is_zero() {
                    continue;
                }
                let p = if state[i] == 0 && state[j] == 0 {
                    both_free.clone()
                } else {
                    survive(state[i]) * survive(state[j])
                };
                e += ratio(w) * p;
            }
        }
        e
    };
    for i in 0..k {
        let free = state.iter().filter(|&&s| s == 0).count();
        let need = 6 - chosen;
        if need == 0 {
            state[i] = 2;
            continue;
        }
        if need == free {
            state[i] = 1;
            chosen += 1;
            continue;
        }
        state[i] = 1;
        let take = expectation(&state, chosen + 1);
        state[i] = 2;
        let keep = expectation(&state, chosen);
        if take > keep {
            state[i] = 1;
            chosen += 1;
        }
    }
    (0..k).filter(|&i| state[i] == 1).collect()
}

/// Four parts of sizes `floor((k + l - 1)/4)` maximising the split weight.
pub fn select_quadripartition(w: &PairWeights) -> Result<Quadripartition> {
    select_quadripartition_seeded(w, 0)
}

pub fn select_quadripartition_seeded(w: &PairWeights, seed: u64) -> Result<Quadripartition> {
    let k = w.k();
    if k < 2 {
        return Err(Error::Domain(format!("quadripartition needs k >= 2, got {k}")));
    }
    let m = Matrix::new(w);
    let total = w.total();
    let guarantee = quadripartition_guarantee(k, &total);
    let sizes = part_sizes(k);
    let finish = |assign: Vec<usize>, method| {
        let mut parts: [Vec<usize>; 4] = Default::default();
        for (i, &p) in assign.iter().enumerate() {
            parts[p].push(i);
        }
        let within: Count = parts.iter().map(|p| m.within(p)).sum();
        Quadripartition {
            parts,
            cross: &total - within,
            guarantee: guarantee.clone(),
            method,
        }
    };
    if multinomial(&sizes) <= EXHAUSTIVE_LIMIT {
        return Ok(finish(exhaustive_partition(&m, sizes), SelectionMethod::Exhaustive));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..RESTARTS {
        let mut assign: Vec<usize> = (0..4).flat_map(|p| std::iter::repeat(p).take(sizes[p])).collect();
        assign.shuffle(&mut rng);
        let method = if attempt == 0 {
            SelectionMethod::LocalSearch
        } else {
            SelectionMethod::Restarts
        };
        let q = finish(improve_partition(&m, assign, &mut rng), method);
        if q.certified() {
            return Ok(q);
        }
    }
    let q = finish(expected_partition(&m, sizes), SelectionMethod::ConditionalExpectation);
    if q.certified() {
        Ok(q)
    } else {
        Err(Error::Invariant("quadripartition below its averaging guarantee".into()))
    }
}

fn multinomial(sizes: &[usize; 4]) -> u128 {
    let mut left: u128 = sizes.iter().sum::<usize>() as u128;
    let mut out = 1u128;
    for &s in sizes {
        out = out.saturating_mul(binomial(left, s as u128));
        left -= s as u128;
    }
    out
}

/// Lexicographically first assignment with minimum within-part weight.
fn exhaustive_partition(m: &Matrix, sizes: [usize; 4]) -> Vec<usize> {
    struct State<'a> {
        m: &'a Matrix,
        assign: Vec<usize>,
        room: [usize; 4],
        best: Option<(Count, Vec<usize>)>,
    }
    fn go(s: &mut State, i: usize, within: Count) {
        if let Some((b, _)) = &s.best {
            if &within >= b {
                return;
            }
        }
        if i == s.m.k {
            s.best = Some((within, s.assign.clone()));
            return;
        }
        for p in 0..4 {
            if s.room[p] == 0 {
                continue;
            }
            let add: Count = (0..i).filter(|&j| s.assign[j] == p).map(|j| s.m.get(i, j)).sum();
            s.room[p] -= 1;
            s.assign.push(p);
            go(s, i + 1, &within + add);
            s.assign.pop();
            s.room[p] += 1;
        }
    }
    let mut s = State {
        m,
        assign: Vec::with_capacity(m.k),
        room: sizes,
        best: None,
    };
    go(&mut s, 0, Count::zero());
    s.best.expect("some assignment exists").1
}

fn improve_partition(m: &Matrix, mut assign: Vec<usize>, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let k = m.k;
    let affinity = |assign: &[usize], i: usize, p: usize| -> Count {
        (0..k).filter(|&j| j != i && assign[j] == p).map(|j| m.get(i, j)).sum()
    };
    loop {
        let mut improved = false;
        let start = rng.gen_range(0..k);
        for di in 0..k {
            let i = (start + di) % k;
            for j in 0..k {
                let (pi, pj) = (assign[i], assign[j]);
                if pi == pj {
                    continue;
                }
                // within-part weight before and after swapping i and j
                let before = affinity(&assign, i, pi) + affinity(&assign, j, pj);
                let after = affinity(&assign, i, pj) + affinity(&assign, j, pi) - m.get(i, j) * 2u8;
                if after < before {
                    assign.swap(i, j);
                    improved = true;
                }
            }
        }
        if !improved {
            return assign;
        }
    }
}

/// Derandomised uniform size-respecting assignment.
fn expected_partition(m: &Matrix, sizes: [usize; 4]) -> Vec<usize> {
    let k = m.k;
    let mut assign: Vec<Option<usize>> = vec![None; k];
    let mut room = sizes;
    let expected_within = |assign: &[Option<usize>], room: &[usize; 4]| -> BigRational {
        let free = assign.iter().filter(|a| a.is_none()).count() as i64;
        let mut e = BigRational::zero();
        for i in 0..k {
            for j in i + 1..k {
                let w = m.get(i, j);
                if w.is_zero() {
                    continue;
                }
                let p = match (assign[i], assign[j]) {
                    (Some(a), Some(b)) => BigRational::from_integer(((a == b) as i64).into()),
                    (Some(a), None) | (None, Some(a)) => {
                        BigRational::new((room[a] as i64).into(), free.into())
                    }
                    (None, None) => {
                        let same: i64 = room.iter().map(|&r| (r * r.saturating_sub(1)) as i64).sum();
                        BigRational::new(same.into(), (free * (free - 1)).into())
                    }
                };
                e += ratio(w) * p;
            }
        }
        e
    };
    for i in 0..k {
        let mut best: Option<(BigRational, usize)> = None;
        for p in 0..4 {
            if room[p] == 0 {
                continue;
            }
            assign[i] = Some(p);
            room[p] -= 1;
            let e = expected_within(&assign, &room);
            room[p] += 1;
            if best.as_ref().map_or(true, |(b, _)| &e < b) {
                best = Some((e, p));
            }
        }
        let p = best.expect("room remains").1;
        assign[i] = Some(p);
        room[p] -= 1;
    }
    assign.into_iter().map(|a| a.expect("assigned")).collect()
}
