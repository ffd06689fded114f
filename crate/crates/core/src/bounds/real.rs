//! Certified non-negative reals as rational enclosures `[lo, hi]`.
//!
//! Values that are rational stay exact (`lo == hi`). Irrational roots are
//! enclosed with at least [`ROOT_DIGITS`] significant decimal digits, so an
//! upper bound is read from `hi` (rounded up) and a lower bound from `lo`
//! (rounded down), and comparisons with exact integers are sound.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Minimum number of significant digits carried by every root enclosure.
pub const ROOT_DIGITS: u32 = 55;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    lo: BigRational,
    hi: BigRational,
}

impl Real {
    pub fn exact(q: BigRational) -> Self {
        assert!(!q.is_negative(), "Real holds non-negative values");
        Real { lo: q.clone(), hi: q }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::exact(BigRational::from_integer(v.into()))
    }

    pub fn from_count(v: &BigUint) -> Self {
        Self::from_int(BigInt::from(v.clone()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::exact(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// A value no smaller than the true one.
    pub fn upper(&self) -> &BigRational {
        &self.hi
    }

    /// A value no larger than the true one.
    pub fn lower(&self) -> &BigRational {
        &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// `q^(1/k)` for a non-negative rational `q`.
    pub fn nth_root(q: &BigRational, k: u32) -> Self {
        assert!(k >= 1);
        assert!(!q.is_negative(), "root of a negative value");
        if k == 1 || q.is_zero() {
            return Self::exact(q.clone());
        }
        // (a/b)^(1/k) = (a b^(k-1))^(1/k) / b
        let a = q.numer().magnitude().clone();
        let b = q.denom().magnitude().clone();
        let radicand = &a * b.pow(k - 1);
        let root_digits = radicand.bits() as f64 * std::f64::consts::LOG10_2 / k as f64;
        let shift = (ROOT_DIGITS as f64 + 2.0 - root_digits).ceil().max(0.0) as u32;
        let scale = BigUint::from(10u8).pow(shift);
        let scaled = radicand * scale.pow(k);
        let r = scaled.nth_root(k);
        let exact = r.pow(k) == scaled;
        let den = BigInt::from(b * &scale);
        let lo = BigRational::new(BigInt::from(r.clone()), den.clone());
        let hi = if exact {
            lo.clone()
        } else {
            BigRational::new(BigInt::from(r + 1u8), den)
        };
        Real { lo, hi }
    }

    /// `base^(num/den)` for a rational base and a (possibly negative)
    /// rational exponent with positive denominator.
    pub fn pow_ratio(base: &BigRational, num: i64, den: u32) -> Self {
        assert!(den >= 1);
        let e = i32::try_from(num).expect("exponent fits in i32");
        assert!(e >= 0 || !base.is_zero(), "zero to a negative power");
        Self::nth_root(&base.pow(e), den)
    }

    pub fn pow(&self, e: u32) -> Self {
        Real {
            lo: self.lo.pow(e as i32),
            hi: self.hi.pow(e as i32),
        }
    }

    pub fn mul(&self, other: &Real) -> Self {
        Real {
            lo: &self.lo * &other.lo,
            hi: &self.hi * &other.hi,
        }
    }

    pub fn add(&self, other: &Real) -> Self {
        Real {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        assert!(!q.is_negative());
        Real {
            lo: &self.lo * q,
            hi: &self.hi * q,
        }
    }

    /// Ordering when the enclosures decide it, `None` when they overlap.
    pub fn try_cmp(&self, other: &Real) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.is_exact() && other.is_exact() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// True when the value is certainly at least `v`.
    pub fn certainly_ge(&self, v: &BigRational) -> bool {
        &self.lo >= v
    }

    /// True when the value is certainly at most `v`.
    pub fn certainly_le(&self, v: &BigRational) -> bool {
        &self.hi <= v
    }

    /// Whether the exact count `c` is at most this value.
    pub fn bounds_count_above(&self, c: &BigUint) -> bool {
        self.certainly_ge(&count_ratio(c))
    }

    /// Whether the exact count `c` is at least this value.
    pub fn bounds_count_below(&self, c: &BigUint) -> bool {
        self.certainly_le(&count_ratio(c))
    }

    /// Midpoint as a float (lossy, for display and ratios).
    pub fn to_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        ratio_to_f64(&mid)
    }

    /// Decimal rendering of the upper end, rounded up at `digits` places.
    pub fn upper_decimal(&self, digits: u32) -> String {
        decimal(&self.hi, digits, true)
    }

    /// Decimal rendering of the lower end, rounded down at `digits` places.
    pub fn lower_decimal(&self, digits: u32) -> String {
        decimal(&self.lo, digits, false)
    }

    /// Smallest integer certainly at least the value.
    pub fn ceil_upper(&self) -> BigUint {
        ceil(&self.hi)
    }

    /// Ceiling of the lower end; equals the true ceiling unless the
    /// enclosure straddles an integer.
    pub fn ceil_lower(&self) -> BigUint {
        ceil(&self.lo)
    }
}

impl fmt::Display for Real {
    /// Upper end with ten decimals, trailing zeros trimmed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.upper_decimal(10))
    }
}

fn count_ratio(c: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(c.clone()))
}

fn ceil(q: &BigRational) -> BigUint {
    q.ceil().to_integer().to_biguint().expect("non-negative")
}

pub(crate) fn ratio_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back through logarithms of the magnitudes.
    let n = q.numer().magnitude();
    let d = q.denom().magnitude();
    let ln = |x: &BigUint| {
        let bits = x.bits();
        let shift = bits.saturating_sub(60);
        (x >> shift).to_f64().unwrap_or(0.0).ln() + shift as f64 * std::f64::consts::LN_2
    };
    (ln(n) - ln(d)).exp()
}

fn decimal(q: &BigRational, digits: u32, round_up: bool) -> String {
    let scale = BigInt::from(10u8).pow(digits);
    let scaled = q * BigRational::from_integer(scale);
    let int = if round_up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let s = int.magnitude().to_string();
    let digits = digits as usize;
    let (whole, frac) = if s.len() > digits {
        let cut = s.len() - digits;
        (s[..cut].to_string(), s[cut..].to_string())
    } else {
        ("0".to_string(), format!("{s:0>digits$}"))
    };
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        whole
    } else {
        format!("{whole}.{frac}")
    }
}
