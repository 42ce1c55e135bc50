//! Coefficient rings for push-forwards.
//!
//! Two models of `A*(X)` are supported. The formal model is the polynomial
//! ring on Segre generators `s1, s2, ...` (`s_i` of degree `i`) truncated
//! above the base dimension. The split model is `A*(P^m) = Q[h]/(h^{m+1})`
//! carrying a bundle `O(a_1) ⊕ ... ⊕ O(a_r)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ring::Coefficient;
use crate::symmfunc::complete_homogeneous_values;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generators {
    /// `s1, s2, ...`, with `s_i` of degree `i`.
    Segre,
    /// A single hyperplane class `h` of degree 1.
    Hyperplane,
}

/// Exponent vector: entry `i` is the exponent of the degree-`(i+1)`
/// generator. Trailing zeros are trimmed.
///
/// Ordered by total degree, then by exponent vector in descending
/// lexicographic order (so `s1^2` precedes `s2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, e)| (i as u32 + 1) * e)
            .sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let exps = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of a graded ring truncated above `top_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    generators: Generators,
    top_degree: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl GradedPoly {
    pub fn zero(generators: Generators, top_degree: u32) -> Self {
        GradedPoly {
            generators,
            top_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(generators: Generators, top_degree: u32, c: BigRational) -> Self {
        let mut p = Self::zero(generators, top_degree);
        p.insert(Monomial::default(), c);
        p
    }

    pub fn one(generators: Generators, top_degree: u32) -> Self {
        Self::constant(generators, top_degree, BigRational::one())
    }

    /// `c * mono`, or zero if `mono` lies above the top degree.
    pub fn monomial(
        generators: Generators,
        top_degree: u32,
        mono: Monomial,
        c: BigRational,
    ) -> Self {
        if generators == Generators::Hyperplane {
            assert!(
                mono.0.len() <= 1,
                "the hyperplane ring has a single generator"
            );
        }
        let mut p = Self::zero(generators, top_degree);
        p.insert(mono, c);
        p
    }

    /// The degree-`i` generator (`s_i` or, for `i = 1`, `h`).
    pub fn generator(generators: Generators, top_degree: u32, i: u32) -> Self {
        assert!(i >= 1, "generators start in degree 1");
        let mut exps = vec![0; i as usize];
        exps[i as usize - 1] = 1;
        Self::monomial(
            generators,
            top_degree,
            Monomial::new(exps),
            BigRational::one(),
        )
    }

    fn insert(&mut self, mono: Monomial, c: BigRational) {
        if mono.degree() <= self.top_degree && !Zero::is_zero(&c) {
            self.terms.insert(mono, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn generators(&self) -> Generators {
        self.generators
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigRational {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial::default())
    }

    /// Same element in a ring with a (possibly lower) top degree.
    pub fn truncate(&self, top_degree: u32) -> Self {
        let mut p = Self::zero(self.generators, top_degree);
        for (m, c) in &self.terms {
            p.insert(m.clone(), c.clone());
        }
        p
    }

    /// True if every term has degree `deg` (the zero element is homogeneous
    /// of every degree).
    pub fn is_homogeneous_of_degree(&self, deg: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == deg)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut p = Self::zero(self.generators, self.top_degree);
        for (m, x) in &self.terms {
            p.insert(m.clone(), x * c);
        }
        p
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.generators == other.generators && self.top_degree == other.top_degree,
            "mixing elements of different rings"
        );
    }

    fn add_scaled(&self, other: &Self, sign: bool) -> Self {
        self.check_compatible(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            if sign {
                *entry += c;
            } else {
                *entry -= c;
            }
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        GradedPoly {
            generators: self.generators,
            top_degree: self.top_degree,
            terms,
        }
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            generators: self.generators,
            top_degree: self.top_degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coefficient: c.to_string(),
                    exponents: m.0.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self, String> {
        let mut p = Self::zero(json.generators, json.top_degree);
        for t in &json.terms {
            let c: BigRational = t
                .coefficient
                .parse()
                .map_err(|_| format!("bad coefficient {}", t.coefficient))?;
            let m = Monomial::new(t.exponents.clone());
            if m.degree() > json.top_degree {
                return Err(format!("term {:?} exceeds top degree", t.exponents));
            }
            p = p.plus(&Self::monomial(json.generators, json.top_degree, m, c));
        }
        Ok(p)
    }
}

impl Coefficient for GradedPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.generators, self.top_degree)
    }

    fn one_like(&self) -> Self {
        Self::one(self.generators, self.top_degree)
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self.add_scaled(other, true)
    }

    fn minus(&self, other: &Self) -> Self {
        self.add_scaled(other, false)
    }

    fn times(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if da + mb.degree() > self.top_degree {
                    continue;
                }
                *terms.entry(ma.mul(mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        GradedPoly {
            generators: self.generators,
            top_degree: self.top_degree,
            terms,
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, g: Generators, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match g {
            Generators::Segre => write!(f, "s{}", i + 1)?,
            Generators::Hyperplane => f.write_str("h")?,
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Renders e.g. `1 + 3*s1 - 1/2*s1^2*s2`, terms in canonical order, or `0`.
impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.generators, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coefficient: String,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub generators: Generators,
    pub top_degree: u32,
    pub terms: Vec<TermJson>,
}

/// A rank-`r` bundle `E` over a base `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleModel {
    /// Independent Segre classes on an `n`-dimensional base.
    Formal { base_dim: u32, rank: usize },
    /// `O(a_1) ⊕ ... ⊕ O(a_r)` over `P^m`.
    SplitOverPm { m: u32, twists: Vec<i64> },
}

impl BundleModel {
    pub fn rank(&self) -> usize {
        match self {
            BundleModel::Formal { rank, .. } => *rank,
            BundleModel::SplitOverPm { twists, .. } => twists.len(),
        }
    }

    pub fn base_dim(&self) -> u32 {
        match self {
            BundleModel::Formal { base_dim, .. } => *base_dim,
            BundleModel::SplitOverPm { m, .. } => *m,
        }
    }

    pub fn generators(&self) -> Generators {
        match self {
            BundleModel::Formal { .. } => Generators::Segre,
            BundleModel::SplitOverPm { .. } => Generators::Hyperplane,
        }
    }

    pub fn one(&self) -> GradedPoly {
        GradedPoly::one(self.generators(), self.base_dim())
    }
}

/// `s_0(E), ..., s_K(E)` under the convention `s(E) c(E^∨) = 1`.
///
/// Formal: `s_k` is the generator of degree `k` (zero above the base
/// dimension). Split: `s_k = h_k(a_1, ..., a_r) h^k`.
pub fn segre_classes(model: &BundleModel, k_max: usize) -> Vec<GradedPoly> {
    let g = model.generators();
    let n = model.base_dim();
    match model {
        BundleModel::Formal { .. } => (0..=k_max)
            .map(|k| match k {
                0 => GradedPoly::one(g, n),
                k => GradedPoly::generator(g, n, k as u32),
            })
            .collect(),
        BundleModel::SplitOverPm { twists, .. } => {
            let roots: Vec<BigRational> = twists
                .iter()
                .map(|&a| BigRational::from_integer(BigInt::from(a)))
                .collect();
            complete_homogeneous_values(&roots, k_max)
                .into_iter()
                .enumerate()
                .map(|(k, c)| GradedPoly::monomial(g, n, Monomial::new(vec![k as u32]), c))
                .collect()
        }
    }
}

/// `∫_{P^m} p`: the coefficient of `h^m`.
pub fn integrate_over_pm(p: &GradedPoly, m: u32) -> Result<BigRational, Error> {
    if p.generators() != Generators::Hyperplane {
        return Err(Error::NoIntegration);
    }
    Ok(p.coefficient(&Monomial::new(vec![m])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn hpoly(m: u32, coeffs: &[i64]) -> GradedPoly {
        coeffs.iter().enumerate().fold(
            GradedPoly::zero(Generators::Hyperplane, m),
            |acc, (k, &c)| {
                acc.plus(&GradedPoly::monomial(
                    Generators::Hyperplane,
                    m,
                    Monomial::new(vec![k as u32]),
                    q(c),
                ))
            },
        )
    }

    #[test]
    fn formal_segre_truncates() {
        let s = segre_classes(
            &BundleModel::Formal {
                base_dim: 2,
                rank: 3,
            },
            3,
        );
        assert_eq!(s.len(), 4);
        assert_eq!(s[0].to_string(), "1");
        assert_eq!(s[1].to_string(), "s1");
        assert_eq!(s[2].to_string(), "s2");
        assert!(s[3].is_zero());
    }

    #[test]
    fn split_segre_examples() {
        let s = segre_classes(
            &BundleModel::SplitOverPm {
                m: 1,
                twists: vec![1, 2],
            },
            1,
        );
        assert_eq!(s, vec![hpoly(1, &[1]), hpoly(1, &[0, 3])]);
        let s = segre_classes(
            &BundleModel::SplitOverPm {
                m: 2,
                twists: vec![1, 1],
            },
            2,
        );
        assert_eq!(
            s,
            vec![hpoly(2, &[1]), hpoly(2, &[0, 2]), hpoly(2, &[0, 0, 3])]
        );
        assert_eq!(s[2].to_string(), "3*h^2");
    }

    #[test]
    fn integration() {
        assert_eq!(integrate_over_pm(&hpoly(1, &[0, 3]), 1), Ok(q(3)));
        assert_eq!(integrate_over_pm(&hpoly(1, &[1, 2]), 1), Ok(q(2)));
        // 5h^2 does not survive in A*(P^1)
        assert_eq!(integrate_over_pm(&hpoly(1, &[0, 0, 5]), 1), Ok(q(0)));
        let formal = GradedPoly::generator(Generators::Segre, 2, 1);
        assert_eq!(integrate_over_pm(&formal, 1), Err(Error::NoIntegration));
    }

    #[test]
    fn rendering_order_and_signs() {
        let g = Generators::Segre;
        let s1 = GradedPoly::generator(g, 3, 1);
        let s2 = GradedPoly::generator(g, 3, 2);
        let half = BigRational::new(1.into(), 2.into());
        let p = s2
            .scale(&q(-1))
            .plus(&s1.times(&s1).scale(&half))
            .plus(&s1.scale(&q(3)))
            .minus(&GradedPoly::one(g, 3))
            .plus(&s1.times(&s2));
        assert_eq!(p.to_string(), "-1 + 3*s1 + 1/2*s1^2 - s2 + s1*s2");
        assert_eq!(GradedPoly::zero(g, 3).to_string(), "0");
        // degree 4 is cut
        assert!(s2.times(&s2).is_zero());
    }

    #[test]
    fn split_segre_inverts_dual_chern() {
        let mut state = 7u64;
        for r in 1..=5usize {
            for m in 0..=4u32 {
                for _ in 0..4 {
                    let twists: Vec<i64> = (0..r)
                        .map(|_| {
                            state = state
                                .wrapping_mul(6364136223846793005)
                                .wrapping_add(1442695040888963407);
                            ((state >> 33) % 7) as i64 - 3
                        })
                        .collect();
                    let model = BundleModel::SplitOverPm {
                        m,
                        twists: twists.clone(),
                    };
                    let total = segre_classes(&model, m as usize)
                        .iter()
                        .fold(model.one().zero_like(), |acc, s| acc.plus(s));
                    let dual_chern = twists
                        .iter()
                        .fold(model.one(), |acc, &a| acc.times(&hpoly(m, &[1, -a])));
                    assert_eq!(
                        total.times(&dual_chern),
                        model.one(),
                        "twists={twists:?} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = Generators::Segre;
        let p = GradedPoly::generator(g, 4, 1)
            .scale(&BigRational::new((-3).into(), 7.into()))
            .plus(&GradedPoly::generator(g, 4, 3));
        let json = serde_json::to_string(&p.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(GradedPoly::from_json(&back).unwrap(), p);
    }

    fn arb_poly(n: u32) -> impl Strategy<Value = GradedPoly> {
        proptest::collection::vec(
            (
                proptest::collection::vec(0u32..3, 0..4),
                -4i64..=4,
                1i64..=3,
            ),
            0..6,
        )
        .prop_map(move |terms| {
            terms
                .into_iter()
                .fold(GradedPoly::zero(Generators::Segre, n), |acc, (e, a, b)| {
                    acc.plus(&GradedPoly::monomial(
                        Generators::Segre,
                        n,
                        Monomial::new(e),
                        BigRational::new(a.into(), b.into()),
                    ))
                })
        })
    }

    fn triple() -> impl Strategy<Value = (GradedPoly, GradedPoly, GradedPoly)> {
        (0u32..=4).prop_flat_map(|n| (arb_poly(n), arb_poly(n), arb_poly(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn ring_axioms((a, b, c) in triple()) {
            prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
            prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert_eq!(a.times(&b), b.times(&a));
            prop_assert_eq!(a.plus(&b), b.plus(&a));
            prop_assert_eq!(a.times(&a.one_like()), a.clone());
            prop_assert!(a.minus(&a).is_zero());
        }

        #[test]
        fn truncation_coherent((a, b, _c) in triple(), cut in 0u32..=4) {
            let cut = cut.min(a.top_degree());
            prop_assert_eq!(
                a.times(&b).truncate(cut),
                a.truncate(cut).times(&b.truncate(cut))
            );
        }
    }
}
