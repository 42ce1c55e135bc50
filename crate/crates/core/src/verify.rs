//! Verification suites behind `grasspush verify`.
//!
//! Reports contain no timing, so the same arguments always produce the
//! same bytes. Elapsed time is returned separately.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chowring::{integrate_over_pm, BundleModel};
use crate::error::Error;
use crate::oracles::{box_pieri_degree, localization_pushforward, verify_theorem};
use crate::partition::rectangle;
use crate::pushforward::{
    degree_grassmann_bundle, degree_grassmannian_classical, degree_terms, fiber_dimension,
    pushforward_theta_power, remark_pushforward, remark_terms, RemarkVariant,
};
use crate::rng::SplitMix64;
use crate::tableaux::syt_count_hook;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem,
    Remark,
    Degrees,
    All,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_r: usize,
    pub max_d: usize,
    /// Powers above the fiber dimension; `None` uses 4 for the theorem
    /// suite and 3 for the remark suite.
    pub extra_n: Option<u32>,
    pub trials: usize,
    pub verbose: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            max_r: 6,
            max_d: 3,
            extra_n: None,
            trials: 20,
            verbose: false,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TrialValues {
    pub roots: Vec<i64>,
    pub localization: String,
    pub theorem: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Cell {
    pub label: String,
    pub checks: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trials: Vec<TrialValues>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub parameters: BTreeMap<String, u64>,
    pub checks: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
    pub cells: Vec<Cell>,
}

impl SuiteReport {
    fn new(suite: &str, parameters: &[(&str, u64)]) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            checks: 0,
            failures: 0,
            findings: Vec::new(),
            cells: Vec::new(),
        }
    }

    fn push(&mut self, cell: Cell) {
        self.checks += cell.checks;
        self.failures += cell.failures;
        self.cells.push(cell);
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub schema: u32,
    pub seed: u64,
    pub failures: usize,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Plain-text rendering. Cells are listed only when they failed, unless
    /// `verbose` is set.
    pub fn render_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verify seed={}", self.seed);
        for s in &self.suites {
            let params: Vec<String> = s
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = writeln!(
                out,
                "[{}] {}: {} checks, {} failures",
                s.suite,
                params.join(" "),
                s.checks,
                s.failures
            );
            for f in &s.findings {
                let _ = writeln!(out, "  {f}");
            }
            for c in s.cells.iter().filter(|c| verbose || c.failures > 0) {
                let status = if c.failures == 0 { "ok  " } else { "FAIL" };
                let _ = write!(
                    out,
                    "  {status} {}: {}/{} failed",
                    c.label, c.failures, c.checks
                );
                if let Some(v) = &c.value {
                    let _ = write!(out, ", value {v}");
                }
                out.push('\n');
                if verbose {
                    for t in &c.trials {
                        let _ = writeln!(
                            out,
                            "       roots={:?} localization={} theorem={}",
                            t.roots, t.localization, t.theorem
                        );
                    }
                }
            }
        }
        let _ = writeln!(out, "total failures: {}", self.failures);
        out
    }
}

/// Seed for one `(d, r, N)` cell of the theorem grid: the first SplitMix64
/// output for `seed ^ (d << 40 | r << 20 | N)`.
pub fn cell_seed(seed: u64, d: usize, r: usize, n: u32) -> u64 {
    let tag = (d as u64) << 40 | (r as u64) << 20 | u64::from(n);
    SplitMix64::new(seed ^ tag).next_u64()
}

/// Localization against the closed formula on the grid `d ≤ max_d`,
/// `d ≤ r ≤ max_r`, `0 ≤ N ≤ d(r-d) + extra`. Powers below the fiber
/// dimension check that both sides vanish.
pub fn theorem_suite(cfg: &VerifyConfig) -> Result<SuiteReport, Error> {
    let extra = cfg.extra_n.unwrap_or(4);
    let mut report = SuiteReport::new(
        "theorem",
        &[
            ("max_d", cfg.max_d as u64),
            ("max_r", cfg.max_r as u64),
            ("extra_n", u64::from(extra)),
            ("trials", cfg.trials as u64),
        ],
    );
    let mut below = (0usize, 0usize);
    for d in 1..=cfg.max_d {
        for r in d..=cfg.max_r {
            let fiber = fiber_dimension(d, r);
            for n in 0..=fiber + extra {
                let check = verify_theorem(d, r, n, cfg.trials, cell_seed(cfg.seed, d, r, n))?;
                let mut failures = check.failures();
                if n < fiber {
                    // both sides must be exactly zero, not merely equal
                    failures = check
                        .trials
                        .iter()
                        .filter(|t| !(t.agrees() && t.localization.is_zero()))
                        .count();
                    below.0 += check.trials.len();
                    below.1 += failures;
                }
                let trials = if cfg.verbose {
                    check
                        .trials
                        .iter()
                        .map(|t| TrialValues {
                            roots: t.roots.clone(),
                            localization: t.localization.to_string(),
                            theorem: t.theorem.to_string(),
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                report.push(Cell {
                    label: format!("d={d} r={r} N={n}"),
                    checks: check.trials.len(),
                    failures,
                    value: None,
                    trials,
                });
            }
        }
    }
    report.findings.push(format!(
        "below the fiber dimension: {} trials, {} nonzero",
        below.0, below.1
    ));
    Ok(report)
}

/// Outcome of comparing both remark variants with the closed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkOutcome {
    pub instances: usize,
    /// Per variant: how many instances matched.
    pub matched: BTreeMap<&'static str, usize>,
    /// Variants matching every instance.
    pub total: Vec<RemarkVariant>,
    /// Whether the termwise coefficients of each total variant were integers
    /// on every instance.
    pub integral: BTreeMap<&'static str, bool>,
    pub cells: Vec<Cell>,
}

impl RemarkOutcome {
    /// The single variant agreeing everywhere, if exactly one does.
    pub fn unique_match(&self) -> Option<RemarkVariant> {
        match self.total.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }
}

/// Compares both remark variants with [`pushforward_theta_power`] in the
/// formal ring of dimension `N - d(r-d)` (no truncation interferes).
pub fn compare_remark(max_d: usize, max_r: usize, extra: u32) -> Result<RemarkOutcome, Error> {
    let mut matched: BTreeMap<&'static str, usize> =
        RemarkVariant::ALL.iter().map(|v| (v.name(), 0)).collect();
    let mut integral: BTreeMap<&'static str, bool> = RemarkVariant::ALL
        .iter()
        .map(|v| (v.name(), true))
        .collect();
    let mut cells = Vec::new();
    let mut instances = 0;
    for d in 1..=max_d {
        for r in d..=max_r {
            let fiber = fiber_dimension(d, r);
            for n in fiber..=fiber + extra {
                instances += 1;
                let model = BundleModel::Formal {
                    base_dim: n - fiber,
                    rank: r,
                };
                let theorem = pushforward_theta_power(n, d, r, &model)?;
                let mut agreeing = Vec::new();
                for v in RemarkVariant::ALL {
                    let ok = match remark_pushforward(n, d, r, &model, v) {
                        Ok(p) => p == theorem,
                        Err(Error::SingularRemarkTerm { .. }) => false,
                        Err(e) => return Err(e),
                    };
                    if ok {
                        *matched.get_mut(v.name()).unwrap() += 1;
                        agreeing.push(v.name());
                        let ints = remark_terms(n, d, r, v)?
                            .iter()
                            .all(|(_, c)| c.is_integer());
                        *integral.get_mut(v.name()).unwrap() &= ints;
                    }
                }
                cells.push(Cell {
                    label: format!("d={d} r={r} N={n}"),
                    checks: 1,
                    failures: 0,
                    value: Some(format!("agree: [{}]", agreeing.join(", "))),
                    trials: Vec::new(),
                });
            }
        }
    }
    let total: Vec<RemarkVariant> = RemarkVariant::ALL
        .into_iter()
        .filter(|v| matched[v.name()] == instances)
        .collect();
    integral.retain(|name, _| total.iter().any(|v| v.name() == *name));
    Ok(RemarkOutcome {
        instances,
        matched,
        total,
        integral,
        cells,
    })
}

pub fn remark_suite(cfg: &VerifyConfig) -> Result<SuiteReport, Error> {
    let extra = cfg.extra_n.unwrap_or(3);
    let outcome = compare_remark(cfg.max_d, cfg.max_r, extra)?;
    let mut report = SuiteReport::new(
        "remark",
        &[
            ("max_d", cfg.max_d as u64),
            ("max_r", cfg.max_r as u64),
            ("extra_n", u64::from(extra)),
        ],
    );
    for cell in outcome.cells.iter().cloned() {
        report.push(cell);
    }
    for (name, count) in &outcome.matched {
        report.findings.push(format!(
            "{name}: matched {count}/{} instances",
            outcome.instances
        ));
    }
    match outcome.unique_match() {
        Some(v) => {
            report
                .findings
                .push(format!("matching variant: {}", v.name()));
            let ints = if outcome.integral[v.name()] {
                "yes"
            } else {
                "no"
            };
            report.findings.push(format!(
                "{} termwise coefficients all integral: {ints}",
                v.name()
            ));
        }
        None => {
            let names: Vec<&str> = outcome.total.iter().map(|v| v.name()).collect();
            report.findings.push(format!(
                "no unique matching variant (matching everywhere: [{}])",
                names.join(", ")
            ));
            report.failures += 1;
        }
    }
    Ok(report)
}

/// Split bundles used by the degree suite: every rank `r ≤ min(max_r, 4)`,
/// base `P^m` for `m ≤ 2`, twists nondecreasing in `{0, 1, 2}`.
pub fn split_models(max_r: usize) -> Vec<BundleModel> {
    fn twist_sets(r: usize, min: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for a in min..=2 {
            cur.push(a);
            twist_sets(r, a, cur, out);
            cur.pop();
        }
    }
    let mut models = Vec::new();
    for r in 1..=max_r.min(4) {
        let mut sets = Vec::new();
        twist_sets(r, 0, &mut Vec::new(), &mut sets);
        for m in 0..=2 {
            for twists in &sets {
                models.push(BundleModel::SplitOverPm {
                    m,
                    twists: twists.clone(),
                });
            }
        }
    }
    models
}

fn distinct(v: &[i64]) -> bool {
    (0..v.len()).all(|i| !v[i + 1..].contains(&v[i]))
}

/// Classical degrees three ways plus the closed formula at a point, then
/// degrees over `P^m` by the closed formula, its term table, the remark
/// expansion, and (for distinct twists) localization at the twists.
pub fn degrees_suite(cfg: &VerifyConfig) -> Result<SuiteReport, Error> {
    let mut report = SuiteReport::new("degrees", &[("max_r", cfg.max_r as u64)]);
    for r in 1..=cfg.max_r {
        for d in 1..=r {
            let classical = degree_grassmannian_classical(d, r)?;
            let point = BundleModel::Formal {
                base_dim: 0,
                rank: r,
            };
            let routes = [
                box_pieri_degree(d, r)?,
                syt_count_hook(&rectangle(d, (r - d) as u32)),
            ];
            let at_point = pushforward_theta_power(fiber_dimension(d, r), d, r, &point)?;
            let mut failures = routes.iter().filter(|x| **x != classical).count();
            if at_point
                != point
                    .one()
                    .scale(&BigRational::from_integer(classical.clone()))
            {
                failures += 1;
            }
            report.push(Cell {
                label: format!("G({d},{r})"),
                checks: 3,
                failures,
                value: Some(classical.to_string()),
                trials: Vec::new(),
            });
        }
    }
    for model in split_models(cfg.max_r) {
        let BundleModel::SplitOverPm { m, twists } = &model else {
            unreachable!()
        };
        let r = twists.len();
        for d in 1..=r {
            let degree = degree_grassmann_bundle(d, &model)?;
            let n = fiber_dimension(d, r) + m;
            let mut checks = 3;
            let mut failures = 0;
            let table: BigRational = degree_terms(d, &model)?
                .iter()
                .map(|t| BigRational::from_integer(t.tableaux.clone()) * &t.integral)
                .sum();
            failures += usize::from(table != degree);
            let remark = remark_pushforward(n, d, r, &model, RemarkVariant::Factorial)?;
            failures += usize::from(integrate_over_pm(&remark, *m)? != degree);
            failures += usize::from(!degree.is_integer());
            if distinct(twists) {
                checks += 1;
                let roots: Vec<BigRational> = twists
                    .iter()
                    .map(|&a| BigRational::from_integer(BigInt::from(a)))
                    .collect();
                failures += usize::from(localization_pushforward(n, d, &roots)? != degree);
            }
            report.push(Cell {
                label: format!("d={d} P^{m} twists={twists:?}"),
                checks,
                failures,
                value: Some(degree.to_string()),
                trials: Vec::new(),
            });
        }
    }
    Ok(report)
}

/// Runs the requested suites in a fixed order: theorem, remark, degrees.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<(Report, Duration), Error> {
    let start = Instant::now();
    let mut suites = Vec::new();
    if matches!(suite, Suite::Theorem | Suite::All) {
        suites.push(theorem_suite(cfg)?);
    }
    if matches!(suite, Suite::Remark | Suite::All) {
        suites.push(remark_suite(cfg)?);
    }
    if matches!(suite, Suite::Degrees | Suite::All) {
        suites.push(degrees_suite(cfg)?);
    }
    let failures = suites.iter().map(|s| s.failures).sum();
    let report = Report {
        schema: SCHEMA_VERSION,
        seed: cfg.seed,
        failures,
        suites,
    };
    Ok((report, start.elapsed()))
}
