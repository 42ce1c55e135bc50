//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line
//! (run with `--nocapture` to see them) and fails on any mismatch or on
//! exceeding its runtime budget.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use grasspush::arith::binomial;
use grasspush::chowring::{integrate_over_pm, segre_classes, BundleModel, GradedPoly};
use grasspush::cli;
use grasspush::oracles::{
    box_pieri_degree, localization_pushforward, sample_roots, verify_theorem,
};
use grasspush::partition::{add_rectangle, enumerate_partitions, rectangle};
use grasspush::pushforward::{
    degree_grassmann_bundle, degree_grassmannian_classical, fiber_dimension, formal_segre,
    jlp_pushforward_term, pushforward_theta_power, remark_pushforward, RemarkVariant,
};
use grasspush::ring::Coefficient;
use grasspush::rng::SplitMix64;
use grasspush::symmfunc::{power_of_theta_expansion, schur_via_jacobi_trudi};
use grasspush::tableaux::{syt_count_hook, syt_count_product, syt_enumerate, ENUMERATION_CAP};
use grasspush::verify::{cell_seed, compare_remark, degrees_suite, split_models, VerifyConfig};

/// Reports the outcome line and asserts both correctness and runtime.
fn gate(id: u32, title: &str, budget: Duration, f: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (ok, detail) = match &outcome {
        Ok(d) if elapsed <= budget => (true, d.clone()),
        Ok(d) => (false, format!("{d}; took {elapsed:?}, budget {budget:?}")),
        Err(e) => (false, e.clone()),
    };
    println!(
        "criterion {id}: {} {title} ({detail}) [{:.2}s]",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

#[test]
fn criterion_01_classical_degrees() {
    gate(
        1,
        "classical degree three ways",
        Duration::from_secs(5),
        || {
            let mut cases = 0;
            for r in 1..=8 {
                for d in 1..=r {
                    let classical =
                        degree_grassmannian_classical(d, r).map_err(|e| e.to_string())?;
                    let boxed = box_pieri_degree(d, r).map_err(|e| e.to_string())?;
                    let hook = syt_count_hook(&rectangle(d, (r - d) as u32));
                    if classical != boxed || classical != hook {
                        return Err(format!("G({d},{r}): {classical} vs {boxed} vs {hook}"));
                    }
                    cases += 1;
                }
            }
            for (d, r, want) in [(2, 4, 2), (2, 5, 5), (3, 6, 42)] {
                let got = degree_grassmannian_classical(d, r).unwrap();
                if got != BigInt::from(want) {
                    return Err(format!("deg G({d},{r}) = {got}, want {want}"));
                }
            }
            Ok(format!("{cases} Grassmannians"))
        },
    );
}

#[test]
fn criterion_02_theorem_vs_localization() {
    gate(
        2,
        "closed formula = localization",
        Duration::from_secs(60),
        || {
            let mut trials = 0;
            for d in 1..=3 {
                for r in d..=6 {
                    let fiber = fiber_dimension(d, r);
                    for n in fiber..=fiber + 4 {
                        let check = verify_theorem(d, r, n, 20, cell_seed(42, d, r, n))
                            .map_err(|e| e.to_string())?;
                        if check.failures() > 0 || check.trials.len() < 20 {
                            return Err(format!(
                                "d={d} r={r} N={n}: {} failures",
                                check.failures()
                            ));
                        }
                        trials += check.trials.len();
                    }
                }
            }
            Ok(format!("{trials} trials, 0 failures"))
        },
    );
}

#[test]
fn criterion_03_zero_extension() {
    gate(
        3,
        "localization vanishes below d(r-d)",
        Duration::from_secs(10),
        || {
            let mut checks = 0;
            for d in 1..=3 {
                for r in d..=6 {
                    for n in 0..fiber_dimension(d, r) {
                        let mut rng = SplitMix64::new(cell_seed(7, d, r, n));
                        for _ in 0..20 {
                            let roots: Vec<BigRational> =
                                sample_roots(&mut rng, r).into_iter().map(q).collect();
                            let v = localization_pushforward(n, d, &roots)
                                .map_err(|e| e.to_string())?;
                            if !v.is_zero() {
                                return Err(format!("d={d} r={r} N={n}: {v}"));
                            }
                            let model = BundleModel::Formal {
                                base_dim: 4,
                                rank: r,
                            };
                            if !pushforward_theta_power(n, d, r, &model).unwrap().is_zero() {
                                return Err(format!("closed formula nonzero at d={d} r={r} N={n}"));
                            }
                            checks += 1;
                        }
                    }
                }
            }
            Ok(format!("{checks} evaluations all zero"))
        },
    );
}

#[test]
fn criterion_04_pieri_tableaux_coherence() {
    gate(
        4,
        "Pieri coefficients = f^mu; principal specialization",
        Duration::from_secs(10),
        || {
            let mut coeffs = 0;
            for d in 1..=4usize {
                let h: Vec<BigRational> = (0..=14u64)
                    .map(|k| BigRational::from_integer(binomial(k + d as u64 - 1, k)))
                    .collect();
                for n in 0..=10u32 {
                    let e = power_of_theta_expansion(n, d);
                    let mut total = q(0);
                    for (mu, c) in e.terms() {
                        if *c != syt_count_hook(mu) {
                            return Err(format!("N={n} d={d} mu={mu}: {c}"));
                        }
                        total +=
                            BigRational::from_integer(c.clone()) * schur_via_jacobi_trudi(mu, &h);
                        coeffs += 1;
                    }
                    if total != q((d as i64).pow(n)) {
                        return Err(format!("N={n} d={d}: specialization {total}"));
                    }
                }
            }
            Ok(format!("{coeffs} coefficients"))
        },
    );
}

#[test]
fn criterion_05_tableaux_three_ways() {
    gate(
        5,
        "hook = product = enumeration",
        Duration::from_secs(30),
        || {
            let mut shapes = 0;
            let mut enumerated = 0;
            for d in 1..=4 {
                for r in d..=7 {
                    for n in 0..=6 {
                        for lam in enumerate_partitions(n, d) {
                            let shifted = add_rectangle(&lam, d, (r - d) as u32).unwrap();
                            let hook = syt_count_hook(&shifted);
                            let product =
                                syt_count_product(&lam, d, r).map_err(|e| e.to_string())?;
                            if hook != product {
                                return Err(format!(
                                    "{lam} d={d} r={r}: hook {hook} product {product}"
                                ));
                            }
                            if shifted.weight() <= ENUMERATION_CAP {
                                if syt_enumerate(&shifted).unwrap() != hook {
                                    return Err(format!("{shifted}: enumeration disagrees"));
                                }
                                enumerated += 1;
                            }
                            if syt_enumerate(&lam).unwrap() != syt_count_hook(&lam) {
                                return Err(format!("{lam}: enumeration disagrees"));
                            }
                            shapes += 1;
                        }
                    }
                }
            }
            Ok(format!("{shapes} shifted shapes, {enumerated} enumerated"))
        },
    );
}

#[test]
fn criterion_06_vanishing_terms() {
    gate(
        6,
        "unrestricted mu-sum = restricted lambda-sum",
        Duration::from_secs(30),
        || {
            let mut cases = 0;
            for d in 1..=3 {
                for r in d..=6 {
                    let fiber = fiber_dimension(d, r);
                    let model = BundleModel::Formal {
                        base_dim: 4,
                        rank: r,
                    };
                    for n in 0..=fiber + 4 {
                        let segre = segre_classes(&model, n as usize + d);
                        let unrestricted = power_of_theta_expansion(n, d).terms().try_fold(
                            model.one().zero_like(),
                            |acc, (mu, f)| {
                                let t = jlp_pushforward_term(mu, d, r, &segre)?;
                                Ok::<GradedPoly, grasspush::Error>(
                                    acc.plus(&t.scale(&BigRational::from_integer(f.clone()))),
                                )
                            },
                        );
                        let unrestricted = unrestricted.map_err(|e| e.to_string())?;
                        let restricted = pushforward_theta_power(n, d, r, &model).unwrap();
                        if unrestricted != restricted {
                            return Err(format!(
                                "d={d} r={r} N={n}: {unrestricted} vs {restricted}"
                            ));
                        }
                        cases += 1;
                    }
                }
            }
            Ok(format!("{cases} symbolic identities"))
        },
    );
}

#[test]
fn criterion_07_rank_one_specialization() {
    gate(7, "d=1 gives s_{N-r+1}", Duration::from_secs(5), || {
        let mut cases = 0;
        for r in 1..=6usize {
            for n in 0..=r as u32 + 4 {
                let model = BundleModel::Formal {
                    base_dim: 5,
                    rank: r,
                };
                let got = pushforward_theta_power(n, 1, r, &model).unwrap();
                let want = formal_segre(i64::from(n) - r as i64 + 1, 5);
                if got != want {
                    return Err(format!("r={r} N={n}: {got} vs {want}"));
                }
                cases += 1;
            }
        }
        Ok(format!("{cases} cases"))
    });
}

#[test]
fn criterion_08_degree_over_projective_space() {
    gate(
        8,
        "bundle degrees over P^m",
        Duration::from_secs(10),
        || {
            let call = |args: &[&str]| {
                let mut out = Vec::new();
                let code = cli::run(
                    std::iter::once("grasspush").chain(args.iter().copied()),
                    &mut out,
                    &mut Vec::new(),
                );
                (code, String::from_utf8(out).unwrap())
            };
            for (args, want) in [
                (
                    ["degree", "--d", "1", "--pm", "1", "--twists", "1,2"],
                    "degree: 3\n",
                ),
                (
                    ["degree", "--d", "2", "--pm", "1", "--twists", "1,1,1"],
                    "degree: 6\n",
                ),
            ] {
                let (code, out) = call(&args);
                if code != 0 || !out.ends_with(want) {
                    return Err(format!("{args:?}: exit {code}, output {out:?}"));
                }
            }
            let mut models = 0;
            let mut localized = 0;
            for model in split_models(6) {
                let BundleModel::SplitOverPm { m, twists } = &model else {
                    unreachable!()
                };
                let r = twists.len();
                for d in 1..=r {
                    let degree = degree_grassmann_bundle(d, &model).unwrap();
                    let n = fiber_dimension(d, r) + m;
                    let remark =
                        remark_pushforward(n, d, r, &model, RemarkVariant::Factorial).unwrap();
                    if integrate_over_pm(&remark, *m).unwrap() != degree {
                        return Err(format!("d={d} P^{m} {twists:?}: remark disagrees"));
                    }
                    let mut sorted = twists.clone();
                    sorted.dedup();
                    if sorted.len() == r {
                        let roots: Vec<BigRational> = twists.iter().map(|&a| q(a)).collect();
                        if localization_pushforward(n, d, &roots).unwrap() != degree {
                            return Err(format!("d={d} P^{m} {twists:?}: localization disagrees"));
                        }
                        localized += 1;
                    }
                    models += 1;
                }
            }
            let report = degrees_suite(&VerifyConfig::default()).map_err(|e| e.to_string())?;
            if report.failures != 0 {
                return Err(format!("degrees suite: {} failures", report.failures));
            }
            Ok(format!(
                "{models} split cases, {localized} also by localization"
            ))
        },
    );
}

#[test]
fn criterion_09_remark_resolution() {
    gate(
        9,
        "exactly one remark variant matches",
        Duration::from_secs(60),
        || {
            let outcome = compare_remark(3, 6, 3).map_err(|e| e.to_string())?;
            match outcome.unique_match() {
                Some(v) if v == RemarkVariant::Factorial => Ok(format!(
                    "{} matches {}/{}; as_printed matches {}",
                    v.name(),
                    outcome.matched["factorial"],
                    outcome.instances,
                    outcome.matched["as_printed"]
                )),
                Some(v) => Err(format!("unexpected unique variant {}", v.name())),
                None => Err(format!("no unique total match: {:?}", outcome.matched)),
            }
        },
    );
}

#[test]
fn criterion_10_determinism() {
    gate(
        10,
        "verify --suite all --seed 42 is byte-identical",
        Duration::from_secs(120),
        || {
            let run = || {
                let mut out = Vec::new();
                let code = cli::run(
                    ["grasspush", "verify", "--suite", "all", "--seed", "42"],
                    &mut out,
                    &mut Vec::new(),
                );
                (code, out)
            };
            let (c1, a) = run();
            let (c2, b) = run();
            if c1 != 0 || c2 != 0 {
                return Err(format!("exit codes {c1}, {c2}"));
            }
            if a != b {
                return Err("reports differ".into());
            }
            Ok(format!("{} bytes, identical", a.len()))
        },
    );
}
