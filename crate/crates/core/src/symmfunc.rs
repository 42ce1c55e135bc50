//! Schur-basis expansion of powers of `θ = ξ_1 + ... + ξ_d` and
//! Jacobi–Trudi evaluation of Schur polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::det::determinant;
use crate::partition::Partition;
use crate::ring::Coefficient;

/// A homogeneous integer combination of Schur polynomials in `d` variables.
///
/// Keys iterate in canonical (reverse-lexicographic) order. Zero
/// coefficients are never stored and every key has at most `d` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
    num_variables: usize,
}

impl SchurExpansion {
    /// The constant `1 = s_∅`.
    pub fn one(num_variables: usize) -> Self {
        assert!(num_variables >= 1, "need at least one variable");
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), BigInt::one());
        SchurExpansion {
            terms,
            num_variables,
        }
    }

    pub fn num_variables(&self) -> usize {
        self.num_variables
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Multiplies by `s_(1)`: every term spreads over the shapes one box larger.
pub fn pieri_multiply(e: &SchurExpansion) -> SchurExpansion {
    pieri_step(e, None)
}

/// Pieri step restricted to shapes of width at most `max_width`.
pub(crate) fn pieri_step(e: &SchurExpansion, max_width: Option<u32>) -> SchurExpansion {
    let mut terms: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (lambda, c) in &e.terms {
        for grown in lambda.add_box_shapes(e.num_variables, max_width) {
            *terms.entry(grown).or_default() += c;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    SchurExpansion {
        terms,
        num_variables: e.num_variables,
    }
}

/// `θ^N` in the Schur basis of `d` variables, by `N` Pieri steps from `1`.
pub fn power_of_theta_expansion(n: u32, d: usize) -> SchurExpansion {
    (0..n).fold(SchurExpansion::one(d), |acc, _| pieri_multiply(&acc))
}

/// `det[h_{v_i + j - i}]` for an arbitrary integer vector `v` (size `|v|`).
///
/// `h[0]` must be the ring identity. Negative indices and indices past the
/// end of `h` read as zero.
pub fn jacobi_trudi<R: Coefficient>(v: &[i64], h: &[R]) -> R {
    let one = h.first().expect("h must contain at least h_0 = 1");
    let zero = one.zero_like();
    let n = v.len();
    let matrix: Vec<Vec<R>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let idx = v[i] + j as i64 - i as i64;
                    usize::try_from(idx)
                        .ok()
                        .and_then(|k| h.get(k))
                        .cloned()
                        .unwrap_or_else(|| zero.clone())
                })
                .collect()
        })
        .collect();
    determinant(&matrix, one)
}

/// The Schur polynomial `Δ_λ(h) = det[h_{λ_i + j - i}]_{1≤i,j≤ℓ(λ)}`.
pub fn schur_via_jacobi_trudi<R: Coefficient>(lambda: &Partition, h: &[R]) -> R {
    let v: Vec<i64> = lambda.parts().iter().map(|&p| i64::from(p)).collect();
    jacobi_trudi(&v, h)
}

/// `h_0, ..., h_K` of the given roots: coefficients of `Π_i 1/(1 - y_i t)`.
pub fn complete_homogeneous_values(roots: &[BigRational], k_max: usize) -> Vec<BigRational> {
    let mut h = vec![BigRational::zero(); k_max + 1];
    h[0] = BigRational::one();
    for y in roots {
        for k in 1..=k_max {
            let prev = &h[k - 1] * y;
            h[k] += prev;
        }
    }
    h
}

/// Serializable view of one expansion term.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SchurTerm {
    pub partition: String,
    pub coefficient: String,
}

impl From<&SchurExpansion> for Vec<SchurTerm> {
    fn from(e: &SchurExpansion) -> Self {
        e.terms()
            .map(|(p, c)| SchurTerm {
                partition: p.to_string(),
                coefficient: c.to_string(),
            })
            .collect()
    }
}
