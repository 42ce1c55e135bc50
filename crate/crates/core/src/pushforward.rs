//! Push-forward of `θ^N` along a Grassmann bundle `G_X(d, E) → X`, and the
//! degree formulas it yields.
//!
//! With `ε = ((r-d)^d)` and `N ≥ d(r-d)`,
//!
//! ```text
//!   π_* θ^N = Σ_{|λ| = N - d(r-d), ℓ(λ) ≤ d}  f^{λ+ε} Δ_λ(s(E))
//! ```
//!
//! where `Δ_λ(s(E)) = det[s_{λ_i + j - i}(E)]`. Below the fiber dimension
//! the push-forward is zero for degree reasons.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{exact_div, factorial};
use crate::chowring::{integrate_over_pm, segre_classes, BundleModel, GradedPoly, Monomial};
use crate::error::Error;
use crate::partition::{add_rectangle, enumerate_partitions, Partition};
use crate::ring::Coefficient;
use crate::symmfunc::{jacobi_trudi, schur_via_jacobi_trudi};
use crate::tableaux::syt_count_hook;

fn check_rank(d: usize, r: usize) -> Result<(), Error> {
    if d == 0 || d > r {
        return Err(Error::InvalidRank { d, r });
    }
    Ok(())
}

/// Relative dimension `d(r-d)` of `G_X(d, E)` over `X`.
pub fn fiber_dimension(d: usize, r: usize) -> u32 {
    (d * (r - d)) as u32
}

/// `π_* Δ_μ(s(Q)) = Δ_{μ-ε}(s(E))`: the Jacobi–Trudi determinant of the
/// integer vector `(μ_1 - (r-d), ..., μ_d - (r-d))`, of size `d`.
///
/// `segre` must list `s_0(E), s_1(E), ...` far enough for every index that
/// does not vanish in the ring; later entries read as zero.
pub fn jlp_pushforward_term(
    mu: &Partition,
    d: usize,
    r: usize,
    segre: &[GradedPoly],
) -> Result<GradedPoly, Error> {
    check_rank(d, r)?;
    if mu.len() > d {
        return Err(Error::TooManyParts {
            partition: mu.clone(),
            max: d,
        });
    }
    let shift = (r - d) as i64;
    let v: Vec<i64> = mu
        .padded(d)
        .into_iter()
        .map(|p| i64::from(p) - shift)
        .collect();
    Ok(jacobi_trudi(&v, segre))
}

/// The Schur form of `π_* θ^N`: pairs `(λ, f^{λ+ε})` in canonical order.
/// Empty when `N < d(r-d)`.
pub fn theorem_terms(n: u32, d: usize, r: usize) -> Result<Vec<(Partition, BigInt)>, Error> {
    check_rank(d, r)?;
    let fiber = fiber_dimension(d, r);
    if n < fiber {
        return Ok(Vec::new());
    }
    enumerate_partitions(n - fiber, d)
        .into_iter()
        .map(|lambda| {
            let shifted = add_rectangle(&lambda, d, (r - d) as u32)?;
            Ok((lambda, syt_count_hook(&shifted)))
        })
        .collect()
}

/// `π_* θ^N` expanded in the model's ring. Homogeneous of degree
/// `N - d(r-d)`; zero when `N < d(r-d)`.
pub fn pushforward_theta_power(
    n: u32,
    d: usize,
    r: usize,
    model: &BundleModel,
) -> Result<GradedPoly, Error> {
    check_rank(d, r)?;
    if model.rank() != r {
        return Err(Error::TwistCount {
            expected: r,
            got: model.rank(),
        });
    }
    let terms = theorem_terms(n, d, r)?;
    let zero = model.one().zero_like();
    let Some(weight) = n.checked_sub(fiber_dimension(d, r)) else {
        return Ok(zero);
    };
    let segre = segre_classes(model, weight as usize + d);
    Ok(terms.iter().fold(zero, |acc, (lambda, f)| {
        let delta = schur_via_jacobi_trudi(lambda, &segre);
        acc.plus(&delta.scale(&BigRational::from_integer(f.clone())))
    }))
}

/// One row of a degree computation: `(λ, f^{λ+ε}, ∫_X Δ_λ(s(E)))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTerm {
    pub lambda: Partition,
    pub tableaux: BigInt,
    pub integral: BigRational,
}

/// The terms `f^{λ+ε} ∫_{P^m} Δ_λ(s(E))`, `|λ| = m`, of the degree of
/// `G_{P^m}(d, E)` under its relative Plücker embedding.
pub fn degree_terms(d: usize, model: &BundleModel) -> Result<Vec<DegreeTerm>, Error> {
    let BundleModel::SplitOverPm { m, .. } = model else {
        return Err(Error::NoIntegration);
    };
    let r = model.rank();
    check_rank(d, r)?;
    let segre = segre_classes(model, *m as usize + d);
    theorem_terms(fiber_dimension(d, r) + m, d, r)?
        .into_iter()
        .map(|(lambda, tableaux)| {
            let integral = integrate_over_pm(&schur_via_jacobi_trudi(&lambda, &segre), *m)?;
            Ok(DegreeTerm {
                lambda,
                tableaux,
                integral,
            })
        })
        .collect()
}

/// `deg G_{P^m}(d, E) = ∫ π_* θ^{d(r-d)+m}`.
///
/// Very-ampleness of `∧^d E` is what makes this number a degree; it is not
/// checked, the value is computed regardless.
pub fn degree_grassmann_bundle(d: usize, model: &BundleModel) -> Result<BigRational, Error> {
    let BundleModel::SplitOverPm { m, .. } = model else {
        return Err(Error::NoIntegration);
    };
    let r = model.rank();
    check_rank(d, r)?;
    let top = pushforward_theta_power(fiber_dimension(d, r) + m, d, r, model)?;
    integrate_over_pm(&top, *m)
}

/// Plücker degree of `G(d, r)`:
/// `(d(r-d))! Π_{l<d} l! / Π_{l≤d} (r-l)!`.
pub fn degree_grassmannian_classical(d: usize, r: usize) -> Result<BigInt, Error> {
    check_rank(d, r)?;
    let num = (1..d as u32).fold(factorial(fiber_dimension(d, r)), |acc, l| {
        acc * factorial(l)
    });
    let den = (1..=d).fold(BigInt::one(), |acc, l| acc * factorial((r - l) as u32));
    Ok(exact_div(&num, &den, "Grassmannian degree"))
}

/// Denominator convention for [`remark_pushforward`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RemarkVariant {
    /// `Π_i (r + k_i - i)`
    AsPrinted,
    /// `Π_i (r + k_i - i)!`
    Factorial,
}

impl RemarkVariant {
    pub const ALL: [RemarkVariant; 2] = [RemarkVariant::AsPrinted, RemarkVariant::Factorial];

    pub fn name(self) -> &'static str {
        match self {
            RemarkVariant::AsPrinted => "as_printed",
            RemarkVariant::Factorial => "factorial",
        }
    }
}

/// Every `k ∈ Z_{≥0}^d` with `|k| = weight`, lexicographically descending.
pub fn compositions(weight: u32, d: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            go(left - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(weight, d, &mut Vec::with_capacity(d), &mut out);
    }
    out
}

/// The nonzero coefficients of the vector-indexed formula
///
/// ```text
///   N! Π_{i<j} (k_i - k_j - i + j) / Π_i D(r + k_i - i),   |k| = N - d(r-d)
/// ```
///
/// with `D(x) = x` or `D(x) = x!` according to `variant`. Terms whose
/// numerator vanishes are dropped before dividing.
pub fn remark_terms(
    n: u32,
    d: usize,
    r: usize,
    variant: RemarkVariant,
) -> Result<Vec<(Vec<u32>, BigRational)>, Error> {
    check_rank(d, r)?;
    let fiber = fiber_dimension(d, r);
    if n < fiber {
        return Err(Error::BelowFiberDimension {
            n,
            fiber_dim: fiber,
        });
    }
    let n_fact = factorial(n);
    let mut out = Vec::new();
    for k in compositions(n - fiber, d) {
        let ks: Vec<i64> = k.iter().map(|&x| i64::from(x)).collect();
        let mut num = n_fact.clone();
        for i in 0..d {
            for j in i + 1..d {
                num *= ks[i] - ks[j] + (j - i) as i64;
            }
        }
        if num.is_zero() {
            continue;
        }
        let mut den = BigInt::one();
        for (i, &ki) in ks.iter().enumerate() {
            // r + k_i - i with 1-based i; never negative since k_i ≥ 0, i ≤ d ≤ r
            let x = r as i64 + ki - (i as i64 + 1);
            den *= match variant {
                RemarkVariant::AsPrinted => BigInt::from(x),
                RemarkVariant::Factorial => factorial(x as u32),
            };
        }
        if den.is_zero() {
            return Err(Error::SingularRemarkTerm { k });
        }
        out.push((k, BigRational::new(num, den)));
    }
    Ok(out)
}

/// Sums [`remark_terms`] against `Π_i s_{k_i}(E)` in the model's ring.
pub fn remark_pushforward(
    n: u32,
    d: usize,
    r: usize,
    model: &BundleModel,
    variant: RemarkVariant,
) -> Result<GradedPoly, Error> {
    if model.rank() != r {
        return Err(Error::TwistCount {
            expected: r,
            got: model.rank(),
        });
    }
    let terms = remark_terms(n, d, r, variant)?;
    let weight = (n - fiber_dimension(d, r)) as usize;
    let segre = segre_classes(model, weight);
    let one = model.one();
    Ok(terms.iter().fold(one.zero_like(), |acc, (k, c)| {
        let product = k
            .iter()
            .fold(one.clone(), |p, &ki| p.times(&segre[ki as usize]));
        acc.plus(&product.scale(c))
    }))
}

/// `s_j` in the formal ring, or zero when `j` is negative.
pub fn formal_segre(j: i64, base_dim: u32) -> GradedPoly {
    let g = crate::chowring::Generators::Segre;
    match j {
        j if j < 0 => GradedPoly::zero(g, base_dim),
        0 => GradedPoly::one(g, base_dim),
        j => GradedPoly::generator(g, base_dim, j as u32),
    }
}

/// Coefficient of the monomial `s_j` (a pure generator) in `p`.
pub fn generator_coefficient(p: &GradedPoly, j: u32) -> BigRational {
    let mut exps = vec![0; j as usize];
    if j > 0 {
        exps[j as usize - 1] = 1;
    }
    p.coefficient(&Monomial::new(exps))
}
