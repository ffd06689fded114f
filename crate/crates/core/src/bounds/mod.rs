//! Closed-form bounds on cycle counts.
//!
//! Integer and rational quantities are exact. Cube roots of powers of three
//! and other irrational values are carried as [`Real`] enclosures, so upper
//! bounds are compared through their upper end and lower bounds through their
//! lower end.

mod partition;
mod real;

pub use partition::max_product_partition;
pub(crate) use real::ratio_to_f64;
pub use real::{Real, ROOT_DIGITS};

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::counting::Count;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, SimpleGraph};

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `(max(c, 0), 2^c - 1)` with `c = m - n + k` the cyclomatic number; the
/// upper value is 0 when `c <= 0`.
pub fn ahrens(n: u64, m: u64, k: u64) -> Result<(Count, Count)> {
    if k == 0 || n < k {
        return Err(Error::Domain(format!(
            "need 1 <= k <= n for the cyclomatic bound, got n={n}, k={k}"
        )));
    }
    let c = m as i128 - n as i128 + k as i128;
    if c <= 0 {
        return Ok((Count::zero(), Count::zero()));
    }
    let c = u64::try_from(c).expect("cyclomatic number fits in u64");
    let hi = (Count::one() << c) - 1u8;
    Ok((Count::from(c), hi))
}

/// `(15/16) 2^(m - n + 1)` for connected graphs.
pub fn aldred_thomassen(n: u64, m: u64) -> Result<BigRational> {
    if n == 0 || m + 1 < n {
        return Err(Error::Domain(format!(
            "no connected graph has n={n} vertices and m={m} edges"
        )));
    }
    let e = m + 1 - n;
    Ok(rational(15, 16) * int(BigInt::one() << e))
}

/// Vertex count, edge count and maximum degree, with `m/(n-1) = s + alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundParams {
    pub n: u64,
    pub m: u64,
    pub delta: u64,
    pub s: u64,
    pub alpha: BigRational,
}

impl BoundParams {
    pub fn new(n: u64, m: u64, delta: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("bound parameters need n >= 2, got {n}")));
        }
        Ok(BoundParams {
            n,
            m,
            delta,
            s: m / (n - 1),
            alpha: rational((m % (n - 1)) as i64, (n - 1) as i64),
        })
    }

    pub fn for_graph(g: &SimpleGraph) -> Result<Self> {
        Self::new(g.n() as u64, g.m() as u64, g.max_degree() as u64)
    }

    pub fn for_multigraph(g: &Multigraph) -> Result<Self> {
        Self::new(g.n() as u64, g.m(), g.max_degree())
    }

    /// `m/(n-1)` exactly.
    pub fn ratio(&self) -> BigRational {
        rational(self.m as i64, (self.n - 1) as i64)
    }

    fn below_three(&self) -> bool {
        self.m < 3 * (self.n - 1)
    }

    /// `(s^(1-alpha) (s+1)^alpha)^(n-1)`, which is the integer
    /// `s^(n-1-r) (s+1)^r` with `r = m mod (n-1)`.
    pub fn balanced_power(&self) -> Count {
        let r = self.m % (self.n - 1);
        let low = self.n - 1 - r;
        Count::from(self.s).pow(low as u32) * Count::from(self.s + 1).pow(r as u32)
    }
}

/// `3^(e/3)` for a possibly negative integer `e`.
pub fn cube_root_three_pow(e: i64) -> Real {
    Real::pow_ratio(&int(3), e, 3)
}

/// Upper bound on the cycles of a multigraph with the given parameters:
/// `(3/4) delta 3^(m/3)` when `m/(n-1) < 3`, otherwise
/// `(3/4) delta (s^(1-alpha) (s+1)^alpha)^(n-1)`.
pub fn new_bound(p: &BoundParams) -> Result<Real> {
    if p.n < 2 {
        return Err(Error::Domain("the bound needs n >= 2".into()));
    }
    let factor = rational(3, 4) * int(p.delta);
    if p.below_three() {
        return Ok(cube_root_three_pow(p.m as i64).scale(&factor));
    }
    let b = Real::exact(int(BigInt::from(p.balanced_power()))).scale(&factor);
    if p.m == 3 * (p.n - 1) && b != cube_root_three_pow(p.m as i64).scale(&factor) {
        return Err(Error::Invariant("branches disagree at m/(n-1) = 3".into()));
    }
    Ok(b)
}

/// Upper bound on the cycles through a vertex of maximum degree:
/// the same shape as [`new_bound`] with factor `delta/2`.
pub fn vertex_cycle_bound(p: &BoundParams) -> Result<Real> {
    if p.n < 3 {
        return Err(Error::Domain(format!("vertex bound needs n >= 3, got {}", p.n)));
    }
    let factor = rational(p.delta as i64, 2);
    Ok(if p.below_three() {
        cube_root_three_pow(p.m as i64).scale(&factor)
    } else {
        Real::exact(int(BigInt::from(p.balanced_power()))).scale(&factor)
    })
}

/// The edge-count-only bound `8.25 3^(m/3)`, and where `1.443^m` sits.
#[derive(Clone, Debug)]
pub struct CorollaryBound {
    pub m: u64,
    pub value: Real,
    /// `1.443^m`, exact.
    pub power: BigRational,
    /// True when `8.25 3^(m/3) < 1.443^m`, so the bound implies
    /// `C(m) < 1.443^m`.
    pub implies_power_bound: bool,
}

pub fn corollary_bound(m: u64) -> CorollaryBound {
    let value = cube_root_three_pow(m as i64).scale(&rational(33, 4));
    let power = rational(1443, 1000).pow(i32::try_from(m).expect("m fits in i32"));
    let implies_power_bound = match value.try_cmp(&Real::exact(power.clone())) {
        Some(ord) => ord == Ordering::Less,
        None => corollary_below_power_exact(m),
    };
    CorollaryBound {
        m,
        value,
        power,
        implies_power_bound,
    }
}

/// `8.25 3^(m/3) < 1.443^m` decided in integers by cubing both sides:
/// `33^3 3^m 1000^(3m) < 4^3 1443^(3m)`.
pub(crate) fn corollary_below_power_exact(m: u64) -> bool {
    let m = u32::try_from(m).expect("m fits in u32");
    let left = BigUint::from(33u32).pow(3) * BigUint::from(3u8).pow(m) * BigUint::from(1000u32).pow(3 * m);
    let right = BigUint::from(64u32) * BigUint::from(1443u32).pow(3 * m);
    left < right
}

/// Smallest `m` at which the corollary bound drops below `1.443^m` for good,
/// found by scanning upward from `from`.
pub fn corollary_crossover(from: u64, to: u64) -> Option<u64> {
    (from..=to).find(|&m| corollary_bound(m).implies_power_bound)
}

/// One branch of the multigraph bounds.
#[derive(Clone, Debug)]
pub struct BoundPair {
    pub lo: Real,
    pub hi: Real,
}

/// Multigraph bounds by regime of `m/(n-1)`. At `m/(n-1) = 3` both are
/// present.
#[derive(Clone, Debug)]
pub struct MultigraphBounds {
    /// `m/(n-1) >= 3`: `(8/27) s B <= C <= (3/4) delta B`, `B` the balanced power.
    pub dense: Option<BoundPair>,
    /// `m/(n-1) <= 3`: `4 3^((m-4)/3) <= C <= (3/4) delta 3^(m/3)`.
    pub sparse: Option<BoundPair>,
}

impl MultigraphBounds {
    /// The branches in order: dense first.
    pub fn branches(&self) -> impl Iterator<Item = &BoundPair> {
        self.dense.iter().chain(self.sparse.iter())
    }
}

pub fn multigraph_bounds(n: u64, m: u64, delta: u64) -> Result<MultigraphBounds> {
    if m < 3 {
        return Err(Error::Domain(format!("multigraph bounds need m >= 3, got {m}")));
    }
    let p = BoundParams::new(n, m, delta)?;
    let three_n = 3 * (n - 1);
    let hi_factor = rational(3, 4) * int(delta);
    let dense = (m >= three_n).then(|| {
        let b = Real::exact(int(BigInt::from(p.balanced_power())));
        BoundPair {
            lo: b.scale(&(rational(8, 27) * int(p.s))),
            hi: b.scale(&hi_factor),
        }
    });
    let sparse = (m <= three_n).then(|| BoundPair {
        lo: cube_root_three_pow(m as i64 - 4).scale(&int(4)),
        hi: cube_root_three_pow(m as i64).scale(&hi_factor),
    });
    if let (Some(d), Some(s)) = (&dense, &sparse) {
        if d.hi != s.hi {
            return Err(Error::Invariant(
                "upper bounds disagree at m/(n-1) = 3".into(),
            ));
        }
    }
    Ok(MultigraphBounds { dense, sparse })
}

/// Bounds in terms of the edge count only: `4 3^((m-4)/3) <= C <= 8.25 3^(m/3)`.
pub fn multigraph_edge_bounds(m: u64) -> Result<BoundPair> {
    if m < 3 {
        return Err(Error::Domain(format!("multigraph bounds need m >= 3, got {m}")));
    }
    Ok(BoundPair {
        lo: cube_root_three_pow(m as i64 - 4).scale(&int(4)),
        hi: cube_root_three_pow(m as i64).scale(&rational(33, 4)),
    })
}

/// `floor(x)^(1 - frac) (floor(x) + 1)^frac` for rational `x >= 1`.
pub fn balanced_base(x: &BigRational) -> Result<Real> {
    if x < &int(1) {
        return Err(Error::Domain("balanced base needs x >= 1".into()));
    }
    let s = x.floor();
    let frac = x - &s;
    // s ((s+1)/s)^frac
    let ratio = (&s + int(1)) / &s;
    let num = i64::try_from(frac.numer().clone()).expect("small exponent");
    let den = u32::try_from(frac.denom().clone()).expect("small exponent");
    Ok(Real::pow_ratio(&ratio, num, den).scale(&s))
}

/// Checks that [`balanced_base`] is non-decreasing on the grid
/// `lo, lo + step, ..., hi`. Returns the first certified decrease, if any;
/// adjacent points whose enclosures overlap are reported as well.
pub fn balanced_base_monotone(
    lo: &BigRational,
    hi: &BigRational,
    step: &BigRational,
) -> Result<Option<BigRational>> {
    let mut x = lo.clone();
    let mut prev = balanced_base(&x)?;
    while &(&x + step) <= hi {
        let next_x = &x + step;
        let next = balanced_base(&next_x)?;
        match prev.try_cmp(&next) {
            Some(Ordering::Less) | Some(Ordering::Equal) => {}
            _ => return Ok(Some(x)),
        }
        x = next_x;
        prev = next;
    }
    Ok(None)
}

/// Every bound evaluated for one graph. `None` marks a bound that does not
/// apply.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: u64,
    pub m: u64,
    pub delta: u64,
    pub components: u64,
    /// Cyclomatic bounds; simple graphs only.
    pub ahrens: Option<(Count, Count)>,
    /// Connected simple graphs only.
    pub aldred_thomassen: Option<BigRational>,
    /// `n >= 2`.
    pub new_bound: Option<Real>,
    pub corollary: Real,
    /// `n >= 3`.
    pub vertex_bound: Option<Real>,
}

impl BoundReport {
    pub fn for_graph(g: &SimpleGraph) -> Result<Self> {
        let (n, m) = (g.n() as u64, g.m() as u64);
        let k = g.components() as u64;
        let params = BoundParams::for_graph(g).ok();
        Ok(BoundReport {
            n,
            m,
            delta: g.max_degree() as u64,
            components: k,
            ahrens: if n == 0 { None } else { Some(ahrens(n, m, k)?) },
            aldred_thomassen: if n > 0 && k == 1 {
                Some(aldred_thomassen(n, m)?)
            } else {
                None
            },
            new_bound: params.as_ref().map(new_bound).transpose()?,
            corollary: corollary_bound(m).value,
            vertex_bound: params
                .as_ref()
                .filter(|p| p.n >= 3)
                .map(vertex_cycle_bound)
                .transpose()?,
        })
    }

    pub fn for_multigraph(g: &Multigraph) -> Result<Self> {
        let params = BoundParams::for_multigraph(g).ok();
        Ok(BoundReport {
            n: g.n() as u64,
            m: g.m(),
            delta: g.max_degree(),
            components: g.components() as u64,
            ahrens: None,
            aldred_thomassen: None,
            new_bound: params.as_ref().map(new_bound).transpose()?,
            corollary: corollary_bound(g.m()).value,
            vertex_bound: params
                .as_ref()
                .filter(|p| p.n >= 3)
                .map(vertex_cycle_bound)
                .transpose()?,
        })
    }

    /// Names of the bounds violated by the exact count `c`.
    pub fn violations(&self, c: &Count) -> Vec<&'static str> {
        let mut out = Vec::new();
        if let Some((lo, hi)) = &self.ahrens {
            if c < lo {
                out.push("ahrens.lo");
            }
            if c > hi {
                out.push("ahrens.hi");
            }
        }
        if let Some(at) = &self.aldred_thomassen {
            if &int(BigInt::from(c.clone())) > at {
                out.push("aldred_thomassen");
            }
        }
        if let Some(b) = &self.new_bound {
            if !b.bounds_count_above(c) {
                out.push("new");
            }
        }
        if !self.corollary.bounds_count_above(c) {
            out.push("corollary");
        }
        out
    }
}
