//! Exact integer helpers shared by the counting formulas.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `num / den`, panicking if the division leaves a remainder. Every caller
/// divides quantities that are integral by a counting argument, so a
/// remainder means a bug upstream.
pub fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> BigInt {
    let (q, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "{what}: {num} is not divisible by {den}");
    q
}
