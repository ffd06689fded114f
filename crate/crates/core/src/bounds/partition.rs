use num_traits::One;

use crate::counting::Count;

/// Largest product of at most `parts_max` positive integers with sum at most
/// `m`, together with one optimal multiset (parts in non-increasing order).
///
/// For a fixed number of parts `t <= m` the optimum splits `m` as evenly as
/// possible; the answer is the best over `t`. Among ties the fewest parts
/// win. `m = 0` (or `parts_max = 0`) gives the empty product.
pub fn max_product_partition(m: u64, parts_max: u64) -> (Count, Vec<u64>) {
    let mut best = (Count::one(), Vec::new());
    for t in 1..=parts_max.min(m) {
        let (q, r) = (m / t, m % t);
        let product = Count::from(q + 1).pow(r as u32) * Count::from(q).pow((t - r) as u32);
        if product > best.0 {
            let mut parts = vec![q + 1; r as usize];
            parts.extend(std::iter::repeat(q).take((t - r) as usize));
            best = (product, parts);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive search over non-increasing sequences.
    fn oracle(m: u64, parts_max: u64) -> Count {
        fn go(left: u64, cap: u64, parts_left: u64) -> Count {
            let mut best = Count::one();
            if parts_left == 0 {
                return best;
            }
            for x in 1..=cap.min(left) {
                let p = go(left - x, x, parts_left - 1) * x;
                if p > best {
                    best = p;
                }
            }
            best
        }
        go(m, m, parts_max)
    }

    #[test]
    fn examples() {
        assert_eq!(max_product_partition(6, 2), (Count::from(9u8), vec![3, 3]));
        assert_eq!(max_product_partition(7, 3), (Count::from(12u8), vec![4, 3]));
        assert_eq!(max_product_partition(11, 3), (Count::from(48u8), vec![4, 4, 3]));
        assert_eq!(max_product_partition(11, 4), (Count::from(54u8), vec![3, 3, 3, 2]));
        assert_eq!(max_product_partition(11, 100).0, Count::from(54u8));
        assert_eq!(max_product_partition(0, 5), (Count::one(), vec![]));
        assert_eq!(max_product_partition(5, 1), (Count::from(5u8), vec![5]));
    }

    #[test]
    fn matches_exhaustive_search() {
        for m in 0..=22 {
            for parts_max in 1..=9 {
                let (p, parts) = max_product_partition(m, parts_max);
                assert_eq!(p, oracle(m, parts_max), "m={m} parts_max={parts_max}");
                assert!(parts.iter().sum::<u64>() <= m);
                assert!(parts.len() as u64 <= parts_max);
                assert_eq!(parts.iter().map(|&x| Count::from(x)).product::<Count>(), p);
            }
        }
    }

    #[test]
    fn powers_of_three() {
        for k in 1..=20u32 {
            let (p, _) = max_product_partition(3 * k as u64, u64::MAX);
            assert_eq!(p, Count::from(3u8).pow(k));
        }
    }
}
