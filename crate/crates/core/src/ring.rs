//! Coefficient domains for determinants: exact rationals and the truncated
//! graded ring both implement [`Coefficient`].

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring with identity, accessed through references.
///
/// `zero_like` and `one_like` exist because some rings (the truncated
/// graded ring) carry a parameter that the constants must share.
pub trait Coefficient: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;

    /// `self / other` when the quotient exists in the ring and the ring knows
    /// how to find it. `None` means "cannot divide here", not "not divisible".
    fn exact_div(&self, _other: &Self) -> Option<Self> {
        None
    }
}

impl Coefficient for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
}
