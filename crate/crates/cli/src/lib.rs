// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line experiments over the gausscalc polynomial calculus.
//!
//! Every subcommand writes a JSON [`Report`] to standard output and a short
//! human summary to standard error. Exit codes: 0 on pass or inconclusive,
//! 1 when a checked identity fails, 2 on usage errors.

pub mod experiments;
pub mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gausscalc_core::gaussian::{LpBudget, Variance};
use gausscalc_core::rational::parse_rational;
use gausscalc_core::semigroups::VarianceParams;
use gausscalc_core::{MultiIndex, Polynomial, Rational};

use experiments::{ConvolutionInput, ProbeConfig, ScanConfig, CONTRACTION_TOL};
pub use report::{Record, Report, Verdict};

#[derive(Debug, Parser)]
#[command(name = "gausscalc", version, about = "Exact polynomial calculus on Gaussian spaces")]
struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Scaling {
    /// Dilation factor in (0, 1]; t = s(1 - lambda^2).
    #[arg(long, value_parser = rational)]
    lambda: Option<Rational>,
    /// Heat time in [0, s).
    #[arg(long, value_parser = rational)]
    t: Option<Rational>,
}

impl Scaling {
    fn params(&self, s: Rational) -> gausscalc_core::Result<VarianceParams> {
        match (&self.lambda, &self.t) {
            (Some(l), _) => VarianceParams::from_lambda(s, l.clone()),
            (None, Some(t)) => VarianceParams::from_t(s, t.clone()),
            (None, None) => unreachable!("clap enforces one of --lambda/--t"),
        }
    }
}

#[derive(Debug, Args)]
struct NormBudget {
    /// Gauss-Hermite nodes per variable for non-even exponents.
    #[arg(long, default_value_t = 200)]
    nodes: usize,
    /// Monte Carlo samples for the consistency check.
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    /// Relative slack for the norm comparison.
    #[arg(long, default_value_t = CONTRACTION_TOL)]
    tol: f64,
}

impl NormBudget {
    fn budget(&self, seed: u64) -> LpBudget {
        LpBudget { nodes: self.nodes, samples: self.samples, seed, ..LpBudget::default() }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check dilate(heat(f, t), lambda) = hermite_semigroup(f, s, lambda).
    CheckIdentity {
        #[arg(long, value_parser = polynomial)]
        f: Polynomial,
        #[arg(long, value_parser = rational)]
        s: Rational,
        #[command(flatten)]
        scaling: Scaling,
    },
    /// Check [laplacian, D] f = 2 laplacian(f) and the nested commutator.
    CheckCommutator {
        #[arg(long, value_parser = polynomial)]
        f: Polynomial,
    },
    /// Compare exponentials of the operator matrices on a graded basis.
    BchCheck {
        /// Number of variables.
        #[arg(long)]
        m: u32,
        /// Maximum degree.
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = rational)]
        s: Rational,
        #[arg(long, value_parser = rational)]
        lambda: Rational,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Print the Hermite polynomial h_{alpha,s}.
    Hermite {
        /// Monomial such as "x1^2 x3" or exponent list such as "2,0,1".
        #[arg(long, value_parser = multi_index)]
        alpha: MultiIndex,
        #[arg(long, value_parser = rational)]
        s: Rational,
    },
    /// Print heat(f, t) = exp(t laplacian / 2) f.
    ApplyHeat {
        #[arg(long, value_parser = polynomial)]
        f: Polynomial,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        t: Rational,
    },
    /// Show f_n = (1/n) sum (x_k^2 - s) tends to 0 while heat(f_n, t) - f_n = t.
    NonclosabilityDemo {
        #[arg(long, value_parser = rational)]
        s: Rational,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = rational)]
        t: Rational,
    },
    /// Norm ratios ||heat(f, t)||_q / ||f||_p over a Hermite grid.
    HypercontractivityScan {
        #[arg(long, value_parser = rational)]
        p: Rational,
        #[arg(long, value_parser = rational)]
        q: Rational,
        #[arg(long, value_parser = rational)]
        s: Rational,
        #[command(flatten)]
        scaling: Scaling,
        #[arg(long, default_value_t = 6)]
        degree_cap: u32,
        /// Variables in the Hermite grid.
        #[arg(long, default_value_t = 1)]
        vars: u32,
        /// Extra seeded random polynomials.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[command(flatten)]
        budget: NormBudget,
    },
    /// Test the norm inequality on a fixed battery and look for violations.
    SharpnessProbe {
        #[arg(long, value_parser = rational)]
        p: Rational,
        #[arg(long, value_parser = rational)]
        q: Rational,
        #[arg(long, value_parser = rational)]
        s: Rational,
        #[command(flatten)]
        scaling: Scaling,
        #[arg(long, default_value_t = 8)]
        degree_cap: u32,
        /// Comma-separated rationals.
        #[arg(long, value_parser = rational, value_delimiter = ',', default_value = "1/10,1/4,1/2,1,2")]
        epsilon_grid: Vec<Rational>,
        #[command(flatten)]
        budget: NormBudget,
    },
    /// Compare quadrature convolution with the heat kernel to algebraic heat.
    ConvolutionCheck {
        #[arg(long, value_parser = polynomial, requires_all = ["t", "x"], conflicts_with = "random")]
        f: Option<Polynomial>,
        #[arg(long, value_parser = rational)]
        t: Option<Rational>,
        /// Point such as "x1=1/2,x2=-1".
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        x: Option<BTreeMap<u32, f64>>,
        /// Quadrature nodes per variable; defaults to the exact minimum.
        #[arg(long)]
        nodes: Option<usize>,
        /// Run this many seeded random cases instead of one point.
        #[arg(long, required_unless_present = "f")]
        random: Option<usize>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn polynomial(text: &str) -> Result<Polynomial, String> {
    text.parse().map_err(|e: gausscalc_core::Error| e.to_string())
}

fn multi_index(text: &str) -> Result<MultiIndex, String> {
    if text.contains('x') {
        let p = polynomial(text)?;
        let mut terms = p.terms();
        return match (terms.next(), terms.next()) {
            (Some((a, c)), None) if gausscalc_core::rational::is_one(c) => Ok(a.clone()),
            (None, _) => Ok(MultiIndex::one()),
            _ => Err(format!("expected a single monic monomial, got {text:?}")),
        };
    }
    let exps: Result<Vec<u32>, _> = text.split(',').map(|e| e.trim().parse::<u32>()).collect();
    exps.map(|e| MultiIndex::from_exponents(&e)).map_err(|e| format!("bad exponent list {text:?}: {e}"))
}

fn point(text: &str) -> Result<BTreeMap<u32, f64>, String> {
    let mut out = BTreeMap::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| format!("expected x<k>=<value>, got {part:?}"))?;
        let var = name
            .trim()
            .strip_prefix('x')
            .and_then(|k| k.parse::<u32>().ok())
            .filter(|k| *k > 0)
            .ok_or_else(|| format!("bad variable name {name:?}"))?;
        let value = rational(value.trim())?;
        out.insert(var, gausscalc_core::rational::to_f64(&value));
    }
    Ok(out)
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let json = report.to_json();
    if let Some(path) = &cli.json_out {
        if let Err(e) = std::fs::write(path, &json) {
            return Outcome::usage(format!("error: cannot write {}: {e}\n", path.display()));
        }
    }
    Outcome { code: report.verdict.exit_code(), stdout: json, stderr: report.summary() }
}

fn execute(cli: &Cli) -> gausscalc_core::Result<Report> {
    let seed = cli.seed;
    Ok(match &cli.command {
        Command::CheckIdentity { f, s, scaling } => experiments::check_identity(f, &scaling.params(s.clone())?),
        Command::CheckCommutator { f } => experiments::check_commutator(f),
        Command::BchCheck { m, n, s, lambda, tol } => experiments::bch(*m, *n, s, lambda, *tol)?,
        Command::Hermite { alpha, s } => experiments::hermite_report(alpha, &Variance::new(s.clone())?),
        Command::ApplyHeat { f, t } => experiments::apply_heat(f, t),
        Command::NonclosabilityDemo { s, n, t } => experiments::nonclosability(&Variance::new(s.clone())?, *n, t)?,
        Command::HypercontractivityScan { p, q, s, scaling, degree_cap, vars, random, budget } => {
            experiments::hypercontractivity_scan(&ScanConfig {
                p: p.clone(),
                q: q.clone(),
                params: scaling.params(s.clone())?,
                degree_cap: *degree_cap,
                vars: *vars,
                random: *random,
                budget: budget.budget(seed),
                tol: budget.tol,
            })?
        }
        Command::SharpnessProbe { p, q, s, scaling, degree_cap, epsilon_grid, budget } => {
            experiments::sharpness_probe(&ProbeConfig {
                p: p.clone(),
                q: q.clone(),
                params: scaling.params(s.clone())?,
                degree_cap: *degree_cap,
                epsilon_grid: epsilon_grid.clone(),
                budget: budget.budget(seed),
                tol: budget.tol,
            })?
        }
        Command::ConvolutionCheck { f, t, x, nodes, random, tol } => {
            let input = match (f, random) {
                (Some(f), _) => ConvolutionInput::Single {
                    f: f.clone(),
                    t: t.clone().expect("clap requires --t with --f"),
                    x: x.clone().expect("clap requires --x with --f"),
                    nodes: *nodes,
                },
                (None, Some(trials)) => ConvolutionInput::Random { trials: *trials, seed },
                (None, None) => unreachable!("clap requires --f or --random"),
            };
            experiments::convolution_check(&input, *tol)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gausscalc_core::rational::ratio;

    #[test]
    fn parses_points() {
        let p = point("x1=1/2, x3=-2").unwrap();
        assert_eq!(p, BTreeMap::from([(1, 0.5), (3, -2.0)]));
        assert!(point("y1=2").is_err());
        assert!(point("x0=2").is_err());
        assert!(point("x1").is_err());
    }

    #[test]
    fn parses_multi_indices() {
        assert_eq!(multi_index("x1^2 x3").unwrap(), MultiIndex::from_exponents(&[2, 0, 1]));
        assert_eq!(multi_index("2, 0, 1").unwrap(), MultiIndex::from_exponents(&[2, 0, 1]));
        assert_eq!(multi_index("1").unwrap(), MultiIndex::var(1));
        assert_eq!(multi_index("0").unwrap(), MultiIndex::one());
        assert!(multi_index("x1 + x2").is_err());
        assert!(multi_index("2,-1").is_err());
    }

    #[test]
    fn scaling_prefers_lambda() {
        let s = Scaling { lambda: Some(ratio(1, 2)), t: None };
        assert_eq!(s.params(int_(4)).unwrap().t(), &int_(3));
        let s = Scaling { lambda: None, t: Some(int_(3)) };
        assert_eq!(s.params(int_(4)).unwrap().lambda(), Some(&ratio(1, 2)));
    }

    fn int_(n: i64) -> Rational {
        gausscalc_core::rational::int(n)
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
