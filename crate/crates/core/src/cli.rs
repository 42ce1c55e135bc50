//! Command-line front end. [`run`] takes the argument list and output sinks
//! so the whole surface can be driven from tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 internal invariant violation.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chowring::{BundleModel, GradedPoly, PolyJson};
use crate::error::Error;
use crate::partition::{add_rectangle, Partition};
use crate::pushforward::{
    degree_grassmann_bundle, degree_grassmannian_classical, degree_terms, pushforward_theta_power,
    theorem_terms,
};
use crate::symmfunc::SchurTerm;
use crate::tableaux::{syt_count_hook, syt_count_product, syt_enumerate};
use crate::verify::{self, Suite, VerifyConfig, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "grasspush",
    version,
    about = "Push-forwards of Plücker class powers on Grassmann bundles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// π_* θ^N for G_X(d, E) in Schur form and expanded
    Pushforward {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        json: bool,
    },
    /// Degree of G_{P^m}(d, O(a_1) ⊕ ... ⊕ O(a_r))
    Degree {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        pm: u32,
        #[arg(long, allow_hyphen_values = true)]
        twists: String,
        #[arg(long)]
        json: bool,
    },
    /// Plücker degree of the Grassmannian G(d, r)
    DegreeClassical {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Number of standard Young tableaux of a shape
    Syt {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = SytMethod::Hook)]
        method: SytMethod,
        /// with `--method product`: count tableaux of shape + ((r-d)^d)
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run oracle suites; exit 1 on any mismatch
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_r: usize,
        #[arg(long, default_value_t = 3)]
        max_d: usize,
        #[arg(long = "extra-N")]
        extra_n: Option<u32>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// list every cell and trial value
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, clap::Args)]
pub struct ModelArgs {
    /// dimension of a base with independent Segre classes
    #[arg(long, conflicts_with_all = ["pm", "twists"])]
    pub base_dim: Option<u32>,
    /// base P^m for a split bundle
    #[arg(long, requires = "twists")]
    pub pm: Option<u32>,
    #[arg(long, requires = "pm", allow_hyphen_values = true)]
    pub twists: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SytMethod {
    Hook,
    Product,
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Theorem,
    Remark,
    Degrees,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Theorem => Suite::Theorem,
            SuiteArg::Remark => Suite::Remark,
            SuiteArg::Degrees => Suite::Degrees,
            SuiteArg::All => Suite::All,
        }
    }
}

/// JSON description of a bundle model.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelJson {
    Formal { base_dim: u32, rank: usize },
    SplitOverPm { m: u32, twists: Vec<i64> },
}

impl From<&BundleModel> for ModelJson {
    fn from(m: &BundleModel) -> Self {
        match m {
            BundleModel::Formal { base_dim, rank } => ModelJson::Formal {
                base_dim: *base_dim,
                rank: *rank,
            },
            BundleModel::SplitOverPm { m, twists } => ModelJson::SplitOverPm {
                m: *m,
                twists: twists.clone(),
            },
        }
    }
}

/// `grasspush pushforward --json` output.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PushforwardJson {
    pub schema: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub d: usize,
    pub r: usize,
    pub model: ModelJson,
    pub schur: Vec<SchurTerm>,
    pub schur_text: String,
    pub expanded: PolyJson,
    pub expanded_text: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeRowJson {
    pub partition: String,
    pub tableaux: String,
    pub integral: String,
}

/// `grasspush degree --json` output.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeJson {
    pub schema: u32,
    pub d: usize,
    pub model: ModelJson,
    pub terms: Vec<DegreeRowJson>,
    pub degree: String,
}

/// Renders `(λ, f)` pairs as `f*D(λ) + ...`, or `0` for no terms.
pub fn render_schur_form(terms: &[SchurTerm]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .iter()
        .map(|t| format!("{}*D{}", t.coefficient, t.partition))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn parse_twists(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad twist `{t}` in `{s}`"))
        })
        .collect()
}

fn build_model(args: &ModelArgs, r: usize) -> Result<BundleModel, String> {
    match (args.base_dim, args.pm, &args.twists) {
        (Some(base_dim), None, None) => Ok(BundleModel::Formal { base_dim, rank: r }),
        (None, Some(m), Some(t)) => {
            let twists = parse_twists(t)?;
            if twists.len() != r {
                return Err(Error::TwistCount {
                    expected: r,
                    got: twists.len(),
                }
                .to_string());
            }
            Ok(BundleModel::SplitOverPm { m, twists })
        }
        _ => Err("give either --base-dim, or --pm together with --twists".to_string()),
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, err) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn execute(cmd: Command, err: &mut dyn Write) -> Result<(String, i32), Failure> {
    let mut out = String::new();
    match cmd {
        Command::Pushforward {
            n,
            d,
            r,
            model,
            json,
        } => {
            let model = build_model(&model, r).map_err(Failure::Usage)?;
            let terms = theorem_terms(n, d, r)?;
            let expanded = pushforward_theta_power(n, d, r, &model)?;
            let schur: Vec<SchurTerm> = terms
                .iter()
                .map(|(p, f)| SchurTerm {
                    partition: p.to_string(),
                    coefficient: f.to_string(),
                })
                .collect();
            let schur_text = render_schur_form(&schur);
            if json {
                out = to_json(&PushforwardJson {
                    schema: SCHEMA_VERSION,
                    n,
                    d,
                    r,
                    model: ModelJson::from(&model),
                    schur,
                    schur_text,
                    expanded: expanded.to_json(),
                    expanded_text: expanded.to_string(),
                });
            } else {
                let _ = writeln!(out, "schur: {schur_text}");
                let _ = writeln!(out, "expanded: {expanded}");
            }
        }
        Command::Degree {
            d,
            pm,
            twists,
            json,
        } => {
            let twists = parse_twists(&twists).map_err(Failure::Usage)?;
            let model = BundleModel::SplitOverPm { m: pm, twists };
            let rows = degree_terms(d, &model)?;
            let degree = degree_grassmann_bundle(d, &model)?;
            if !degree.is_integer() {
                return Err(Failure::Internal(format!(
                    "degree {degree} is not an integer"
                )));
            }
            let degree: BigInt = degree.to_integer();
            if json {
                out = to_json(&DegreeJson {
                    schema: SCHEMA_VERSION,
                    d,
                    model: ModelJson::from(&model),
                    terms: rows
                        .iter()
                        .map(|t| DegreeRowJson {
                            partition: t.lambda.to_string(),
                            tableaux: t.tableaux.to_string(),
                            integral: t.integral.to_string(),
                        })
                        .collect(),
                    degree: degree.to_string(),
                });
            } else {
                let _ = writeln!(out, "lambda\tf^(lambda+eps)\tintegral");
                for t in &rows {
                    let _ = writeln!(out, "{}\t{}\t{}", t.lambda, t.tableaux, t.integral);
                }
                let _ = writeln!(out, "degree: {degree}");
            }
        }
        Command::DegreeClassical { d, r, json } => {
            let degree = degree_grassmannian_classical(d, r)?;
            if json {
                out = to_json(&serde_json::json!({
                    "schema": SCHEMA_VERSION, "d": d, "r": r, "degree": degree.to_string()
                }));
            } else {
                let _ = writeln!(out, "{degree}");
            }
        }
        Command::Syt {
            shape,
            method,
            d,
            r,
            json,
        } => {
            let lambda: Partition = shape.parse()?;
            let (count, counted_shape) = match method {
                SytMethod::Hook => (syt_count_hook(&lambda), lambda.clone()),
                SytMethod::Enumerate => (syt_enumerate(&lambda)?, lambda.clone()),
                SytMethod::Product => {
                    let (Some(d), Some(r)) = (d, r) else {
                        return Err(Failure::Usage("--method product needs --d and --r".into()));
                    };
                    let count = syt_count_product(&lambda, d, r)?;
                    (count, add_rectangle(&lambda, d, (r - d) as u32)?)
                }
            };
            if json {
                out = to_json(&serde_json::json!({
                    "schema": SCHEMA_VERSION,
                    "shape": counted_shape.to_string(),
                    "method": format!("{method:?}").to_lowercase(),
                    "count": count.to_string(),
                }));
            } else {
                let _ = writeln!(out, "{count}");
            }
        }
        Command::Verify {
            suite,
            seed,
            max_r,
            max_d,
            extra_n,
            trials,
            verbose,
            json,
        } => {
            if max_d == 0 || max_r == 0 || trials == 0 {
                return Err(Failure::Usage(
                    "--max-r, --max-d and --trials must be positive".into(),
                ));
            }
            let cfg = VerifyConfig {
                seed,
                max_r,
                max_d,
                extra_n,
                trials,
                verbose,
            };
            let (report, elapsed) = verify::run(suite.into(), &cfg)?;
            out = if json {
                to_json(&report)
            } else {
                report.render_text(verbose)
            };
            let _ = writeln!(err, "elapsed: {:.3}s", elapsed.as_secs_f64());
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            return Ok((out, code));
        }
    }
    Ok((out, EXIT_OK))
}

/// Rebuilds the expanded class from `pushforward --json` output.
pub fn expanded_from_json(json: &PushforwardJson) -> Result<GradedPoly, String> {
    GradedPoly::from_json(&json.expanded)
}
