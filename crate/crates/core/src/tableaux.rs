//! Counting standard Young tableaux, three independent ways.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{exact_div, factorial};
use crate::error::Error;
use crate::partition::Partition;

/// Largest shape `syt_enumerate` will walk.
pub const ENUMERATION_CAP: u32 = 12;

/// `f^λ = |λ|! / Π hooks`.
pub fn syt_count_hook(lambda: &Partition) -> BigInt {
    let hooks = crate::partition::hook_lengths(lambda)
        .into_iter()
        .fold(BigInt::one(), |acc, h| acc * h);
    exact_div(&factorial(lambda.weight()), &hooks, "hook-length formula")
}

/// `f^{λ+ε}` for `ε = ((r-d)^d)` via the determinantal product
///
/// ```text
///   N! Π_{i<j} (λ_i - λ_j - i + j) / Π_i (r + λ_i - i)!,   N = |λ| + d(r-d)
/// ```
///
/// with λ zero-padded to `d` rows.
pub fn syt_count_product(lambda: &Partition, d: usize, r: usize) -> Result<BigInt, Error> {
    if d == 0 || d > r {
        return Err(Error::InvalidRank { d, r });
    }
    if lambda.len() > d {
        return Err(Error::TooManyParts {
            partition: lambda.clone(),
            max: d,
        });
    }
    let parts: Vec<i64> = lambda.padded(d).into_iter().map(i64::from).collect();
    let n = lambda.weight() + (d * (r - d)) as u32;

    let mut num = factorial(n);
    for i in 0..d {
        for j in i + 1..d {
            num *= parts[i] - parts[j] + (j - i) as i64;
        }
    }
    let den = (0..d).fold(BigInt::one(), |acc, i| {
        // 1-based row index is i + 1
        acc * factorial((r as i64 + parts[i] - (i as i64 + 1)) as u32)
    });
    Ok(exact_div(&num, &den, "tableau product formula"))
}

/// Counts standard fillings of λ by backtracking over every placement of
/// `1, 2, ..., |λ|`.
pub fn syt_enumerate(lambda: &Partition) -> Result<BigInt, Error> {
    let cells = lambda.weight();
    if cells > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            cells,
            cap: ENUMERATION_CAP,
        });
    }
    let shape = lambda.parts();
    let mut filled = vec![0u32; shape.len()];
    Ok(BigInt::from(place(shape, &mut filled, cells)))
}

// `filled[i]` is how many cells of row i already carry a label. The next
// label may go at the end of any row whose row above is strictly longer.
fn place(shape: &[u32], filled: &mut [u32], left: u32) -> u64 {
    if left == 0 {
        return 1;
    }
    let mut count = 0;
    for i in 0..shape.len() {
        let fits_row = filled[i] < shape[i];
        let above_ok = i == 0 || filled[i - 1] > filled[i];
        if fits_row && above_ok {
            filled[i] += 1;
            count += place(shape, filled, left - 1);
            filled[i] -= 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{add_rectangle, enumerate_partitions};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hook_examples() {
        assert_eq!(syt_count_hook(&Partition::empty()), BigInt::from(1));
        assert_eq!(syt_count_hook(&p(&[1])), BigInt::from(1));
        assert_eq!(syt_count_hook(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(syt_count_hook(&p(&[2, 2])), BigInt::from(2));
        assert_eq!(syt_count_hook(&p(&[3, 3, 3])), BigInt::from(42));
    }

    #[test]
    fn product_examples() {
        assert_eq!(
            syt_count_product(&Partition::empty(), 2, 4).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(syt_count_product(&p(&[1]), 2, 3).unwrap(), BigInt::from(2));
        assert_eq!(
            syt_count_product(&Partition::empty(), 1, 5).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn product_rejects_bad_input() {
        assert!(matches!(
            syt_count_product(&p(&[1, 1, 1]), 2, 4),
            Err(Error::TooManyParts { .. })
        ));
        assert!(matches!(
            syt_count_product(&Partition::empty(), 3, 2),
            Err(Error::InvalidRank { d: 3, r: 2 })
        ));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(syt_enumerate(&p(&[3])).unwrap(), BigInt::from(1));
        assert_eq!(syt_enumerate(&p(&[1, 1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(syt_enumerate(&p(&[2, 2])).unwrap(), BigInt::from(2));
        assert_eq!(syt_enumerate(&Partition::empty()).unwrap(), BigInt::from(1));
        assert!(matches!(
            syt_enumerate(&p(&[13])),
            Err(Error::EnumerationCap { cells: 13, cap: 12 })
        ));
    }

    #[test]
    fn hook_matches_enumeration() {
        for n in 0..=10 {
            for lam in enumerate_partitions(n, n as usize) {
                assert_eq!(syt_count_hook(&lam), syt_enumerate(&lam).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn product_matches_hook_on_shifted_shapes() {
        for d in 1..=4 {
            for r in d..=7 {
                for n in 0..=6 {
                    for lam in enumerate_partitions(n, d) {
                        let shifted = add_rectangle(&lam, d, (r - d) as u32).unwrap();
                        assert_eq!(
                            syt_count_product(&lam, d, r).unwrap(),
                            syt_count_hook(&shifted),
                            "λ={lam} d={d} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 0..=8u32 {
            let total: BigInt = enumerate_partitions(n, n as usize)
                .iter()
                .map(|lam| {
                    let f = syt_count_hook(lam);
                    &f * &f
                })
                .sum();
            assert_eq!(total, factorial(n), "n={n}");
        }
    }
}
