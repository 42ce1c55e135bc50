//! Independent checks: Gysin localization over explicit roots, box-truncated
//! Schubert calculus on `G(d, r)`, and the seeded random driver comparing
//! localization against the closed formula.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::Error;
use crate::partition::rectangle;
use crate::pushforward::{fiber_dimension, theorem_terms};
use crate::rng::SplitMix64;
use crate::symmfunc::{
    complete_homogeneous_values, pieri_step, schur_via_jacobi_trudi, SchurExpansion,
};

/// Every `d`-element subset of `0..r` as a sorted index list.
fn subsets(r: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn go(start: usize, r: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            if r - i < d - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, r, d, cur, out);
            cur.pop();
        }
    }
    go(0, r, d, &mut cur, &mut out);
    out
}

/// `Σ_{|I|=d} (Σ_{i∈I} y_i)^N / Π_{i∈I, j∉I} (y_i - y_j)`.
pub fn localization_pushforward(
    n: u32,
    d: usize,
    roots: &[BigRational],
) -> Result<BigRational, Error> {
    let r = roots.len();
    if d == 0 || d > r {
        return Err(Error::InvalidRank { d, r });
    }
    for i in 0..r {
        if roots[i + 1..].contains(&roots[i]) {
            return Err(Error::RepeatedRoots);
        }
    }
    let mut total = BigRational::zero();
    for subset in subsets(r, d) {
        let mut inside = vec![false; r];
        for &i in &subset {
            inside[i] = true;
        }
        let theta: BigRational = subset.iter().map(|&i| roots[i].clone()).sum();
        let mut den = BigRational::one();
        for &i in &subset {
            for j in (0..r).filter(|&j| !inside[j]) {
                den *= &roots[i] - &roots[j];
            }
        }
        total += num_traits::pow(theta, n as usize) / den;
    }
    Ok(total)
}

/// The closed formula with `s_k(E)` specialized to `h_k(roots)` and no
/// truncation: `Σ_λ f^{λ+ε} Δ_λ(h(roots))`.
pub fn evaluate_theorem_at_roots(
    n: u32,
    d: usize,
    roots: &[BigRational],
) -> Result<BigRational, Error> {
    let r = roots.len();
    let terms = theorem_terms(n, d, r)?;
    let Some(weight) = n.checked_sub(fiber_dimension(d, r)) else {
        return Ok(BigRational::zero());
    };
    let h = complete_homogeneous_values(roots, weight as usize + d);
    Ok(terms.iter().fold(BigRational::zero(), |acc, (lambda, f)| {
        acc + BigRational::from_integer(f.clone()) * schur_via_jacobi_trudi(lambda, &h)
    }))
}

/// Degree of `G(d, r)` as the coefficient of the full `d × (r-d)` box in
/// `θ^{d(r-d)}`, with Pieri steps confined to the box.
pub fn box_pieri_degree(d: usize, r: usize) -> Result<BigInt, Error> {
    if d == 0 || d > r {
        return Err(Error::InvalidRank { d, r });
    }
    let width = (r - d) as u32;
    let steps = fiber_dimension(d, r);
    let top = (0..steps).fold(SchurExpansion::one(d), |acc, _| {
        pieri_step(&acc, Some(width))
    });
    Ok(top.coefficient(&rectangle(d, width)))
}

/// One random comparison in [`verify_theorem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub roots: Vec<i64>,
    pub localization: BigRational,
    pub theorem: BigRational,
}

impl Trial {
    pub fn agrees(&self) -> bool {
        self.localization == self.theorem
    }
}

#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub d: usize,
    pub r: usize,
    pub n: u32,
    pub seed: u64,
    pub trials: Vec<Trial>,
    pub elapsed: Duration,
}

impl TheoremCheck {
    pub fn failures(&self) -> usize {
        self.trials.iter().filter(|t| !t.agrees()).count()
    }
}

/// `r` distinct integers in `[-10r, 10r]`, rejection-sampled from `rng`.
///
/// Each draw is `next_u64() % (20r + 1)` shifted down by `10r`; a value
/// already drawn is discarded and redrawn.
pub fn sample_roots(rng: &mut SplitMix64, r: usize) -> Vec<i64> {
    let half = 10 * r as i64;
    let span = (2 * half + 1) as u64;
    let mut roots = Vec::with_capacity(r);
    while roots.len() < r {
        let y = (rng.next_u64() % span) as i64 - half;
        if !roots.contains(&y) {
            roots.push(y);
        }
    }
    roots
}

/// Compares [`localization_pushforward`] with [`evaluate_theorem_at_roots`]
/// at `trials` seeded random root sets. Roots are drawn up front in trial
/// order, so the outcome depends only on the arguments.
pub fn verify_theorem(
    d: usize,
    r: usize,
    n: u32,
    trials: usize,
    seed: u64,
) -> Result<TheoremCheck, Error> {
    if d == 0 || d > r {
        return Err(Error::InvalidRank { d, r });
    }
    let start = Instant::now();
    let mut rng = SplitMix64::new(seed);
    let draws: Vec<Vec<i64>> = (0..trials).map(|_| sample_roots(&mut rng, r)).collect();
    let trials = draws
        .into_par_iter()
        .map(|ints| {
            let roots: Vec<BigRational> = ints
                .iter()
                .map(|&y| BigRational::from_integer(y.into()))
                .collect();
            let localization = localization_pushforward(n, d, &roots)?;
            let theorem = evaluate_theorem_at_roots(n, d, &roots)?;
            Ok(Trial {
                roots: ints,
                localization,
                theorem,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(TheoremCheck {
        d,
        r,
        n,
        seed,
        trials,
        elapsed: start.elapsed(),
    })
}
