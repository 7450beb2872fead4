// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! The experiments behind each subcommand. Every function returns a
//! [`Report`]; argument parsing and output live in the crate root.

use std::collections::BTreeMap;
use std::sync::Arc;

use gausscalc_core::gaussian::{expectation, inner_product, lp_norm, LpBudget, LpEstimate, Variance};
use gausscalc_core::matrixrep::{bch_check, GradedBasis};
use gausscalc_core::random::{random_polynomial, rng, PolySpec};
use gausscalc_core::rational::{int, to_f64};
use gausscalc_core::semigroups::*;
use gausscalc_core::{Error, MultiIndex, Polynomial, Rational, Result};
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde_json::Value;

use crate::report::{Record, Report, Verdict};

/// Default relative slack for numeric `L^p → L^q` comparisons.
pub const CONTRACTION_TOL: f64 = 1e-6;

fn describe_params(report: &mut Report, params: &VarianceParams) {
    report.param("s", params.s()).param("t", params.t());
    match params.lambda() {
        Some(l) => report.param("lambda", l),
        None => report.param("lambda_squared", params.lambda_squared()),
    };
    report.param_value("tau", crate::report::float(params.tau()));
}

pub fn check_identity(f: &Polynomial, params: &VarianceParams) -> Report {
    let mut report = Report::new("check-identity");
    report.param("f", f);
    describe_params(&mut report, params);
    let check = verify_ident2(f, params);
    report.push(
        Record::new("dilate(heat(f, t), lambda) = hermite_semigroup(f, s, lambda)")
            .text("lhs", &check.lhs)
            .text("rhs", &check.rhs)
            .text("witness", &check.witness)
            .flag("holds", check.holds),
    );
    report.verdict = if check.holds { Verdict::Pass } else { Verdict::Fail };
    report
}

pub fn check_commutator(f: &Polynomial) -> Report {
    let mut report = Report::new("check-commutator");
    report.param("f", f);
    let first = verify_commutator(f);
    let nested = verify_nested_commutator(f);
    for (name, c) in
        [("[laplacian, euler_d] f = 2 laplacian(f)", &first), ("[laplacian, [laplacian, euler_d]] f = 0", &nested)]
    {
        report.push(
            Record::new(name)
                .text("lhs", &c.lhs)
                .text("rhs", &c.rhs)
                .text("witness", &c.witness)
                .flag("holds", c.holds),
        );
    }
    report.verdict = if first.holds && nested.holds { Verdict::Pass } else { Verdict::Fail };
    report
}

pub fn bch(vars: u32, max_degree: u32, s: &Rational, lambda: &Rational, tol: f64) -> Result<Report> {
    let basis = Arc::new(GradedBasis::new(vars, max_degree)?);
    let r = bch_check(s, lambda, &basis, tol)?;
    let mut report = Report::new("bch-check");
    report
        .param("m", vars)
        .param("n", max_degree)
        .param("s", s)
        .param("lambda", lambda)
        .param("t", &r.t)
        .param_value("tau", crate::report::float(r.tau))
        .param_value("tol", crate::report::float(tol));
    report.push(Record::new("basis").int("dimension", r.dimension as u64));
    report.push(Record::new("commutator [s laplacian, -euler_d] = -2 s laplacian").flag("holds", r.commutator_holds));
    report.push(
        Record::new("bch factorisation")
            .float("discrepancy", r.bch_discrepancy)
            .flag("within_tol", r.bch_discrepancy <= tol),
    );
    report.push(
        Record::new("exp(-tau N_s) = exp(-tau D) exp(t laplacian / 2)")
            .float("discrepancy", r.bch2_discrepancy)
            .flag("within_tol", r.bch2_discrepancy <= tol),
    );
    report.push(
        Record::new("float exp(-tau N_s) vs exact product")
            .float("discrepancy", r.float_vs_exact_discrepancy)
            .flag("within_tol", r.float_vs_exact_discrepancy <= tol),
    );
    report.push(
        Record::new("-(exp(-2 tau) - 1)/2 = t/(2s)")
            .float("lhs", r.scalar_lhs)
            .text("rhs", &r.scalar_rhs)
            .float("discrepancy", r.scalar_discrepancy())
            .flag("exact_holds", r.scalar_exact_holds),
    );
    report.push(
        Record::new("exact route: diag(lambda^|alpha|) exp(t laplacian / 2) = hermite_semigroup")
            .flag("holds", r.exact_route_holds())
            .value(
                "mismatches",
                Value::Array(r.exact_mismatches.iter().map(|a| Value::String(a.to_string())).collect()),
            ),
    );
    report.verdict = if r.passed() { Verdict::Pass } else { Verdict::Fail };
    Ok(report)
}

pub fn hermite_report(alpha: &MultiIndex, s: &Variance) -> Report {
    let mut report = Report::new("hermite");
    report.param("alpha", alpha).param("s", s.value());
    let h = hermite(alpha, s);
    let norm = inner_product(&h, &h, s);
    let formula =
        Rational::from_integer(alpha.factorial()) * num_traits::pow(s.value().clone(), alpha.degree() as usize);
    let eigen = verify_eigen_relation(alpha, s);
    report.push(Record::new("hermite").text("h", &h).int("degree", alpha.degree() as u64));
    report.push(
        Record::new("norm squared")
            .text("inner_product", &norm)
            .text("factorial_formula", &formula)
            .flag("holds", norm == formula),
    );
    report.push(Record::new("N_s h = |alpha| h").flag("holds", eigen.holds));
    report.verdict = if norm == formula && eigen.holds { Verdict::Pass } else { Verdict::Fail };
    report
}

pub fn apply_heat(f: &Polynomial, t: &Rational) -> Report {
    let mut report = Report::new("apply-heat");
    report.param("f", f).param("t", t);
    report.push(Record::new("heat").text("result", heat(f, t)));
    report
}

/// `f_n = (1/n) Σ_{k ≤ n} (x_k² − s)`.
pub fn nonclosability_sequence(s: &Rational, n: u32) -> Polynomial {
    let shift = Polynomial::constant(s.clone());
    (1..=n)
        .map(|k| &Polynomial::var(k).pow(2) - &shift)
        .fold(Polynomial::zero(), |a, b| &a + &b)
        .scale(&Rational::new(1.into(), n.into()))
}

pub fn nonclosability(s: &Variance, n: u32, t: &Rational) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut report = Report::new("nonclosability-demo");
    report.param("s", s.value()).param("n", n).param("t", t);
    let f_n = nonclosability_sequence(s.value(), n);
    let norm = inner_product(&f_n, &f_n, s);
    let expected = s.value() * s.value() * int(2) / int(n as i64);
    let lap = laplacian(&f_n);
    let diff = &heat(&f_n, t) - &f_n;
    let ok_norm = norm == expected;
    let ok_lap = lap == Polynomial::constant(int(2));
    let ok_heat = diff == Polynomial::constant(t.clone());
    report.push(
        Record::new("norm squared of f_n")
            .text("value", &norm)
            .text("expected_2s^2/n", &expected)
            .flag("holds", ok_norm),
    );
    report.push(Record::new("laplacian of f_n").text("value", &lap).flag("holds", ok_lap));
    report.push(Record::new("heat(f_n, t) - f_n").text("value", &diff).flag("holds", ok_heat));
    report.verdict = if ok_norm && ok_lap && ok_heat { Verdict::Pass } else { Verdict::Fail };
    Ok(report)
}

/// `(q − 1)/(p − 1) ≤ s/(s − t)`.
pub fn nelson_condition(p: &Rational, q: &Rational, params: &VarianceParams) -> bool {
    let lhs = (q - Rational::one()) / (p - Rational::one());
    let rhs = params.s() / (params.s() - params.t());
    lhs <= rhs
}

fn even_exponent(p: &Rational) -> Option<u32> {
    (p.is_integer()).then(|| p.to_integer().to_u32()).flatten().filter(|k| *k >= 2 && k % 2 == 0)
}

/// `‖heat(f, t)‖_{L^q(μ_{s−t})}` against `‖f‖_{L^p(μ_s)}`.
#[derive(Debug, Clone)]
pub struct NormComparison {
    pub lhs: LpEstimate,
    pub rhs: LpEstimate,
    /// `E[g^q]^p ≤ E[f^p]^q` in exact arithmetic, for even `p` and `q`.
    pub exact: Option<bool>,
    /// `lhs ≤ rhs` up to the relative slack.
    pub contracts: bool,
    /// `lhs > rhs` beyond the slack and both error bounds.
    pub certain_violation: bool,
}

pub fn compare_norms(
    f: &Polynomial,
    p: &Rational,
    q: &Rational,
    params: &VarianceParams,
    budget: &LpBudget,
    tol: f64,
) -> Result<NormComparison> {
    let g = heat(f, params.t());
    let (source, target) = (params.variance(), params.heat_variance());
    let lhs = lp_norm(&g, to_f64(q), &target, budget)?;
    let rhs = lp_norm(f, to_f64(p), &source, budget)?;
    let exact = match (even_exponent(p), even_exponent(q)) {
        (Some(pe), Some(qe)) => {
            let a = expectation(&g.pow(qe), &target);
            let b = expectation(&f.pow(pe), &source);
            Some(num_traits::pow(a, pe as usize) <= num_traits::pow(b, qe as usize))
        }
        _ => None,
    };
    let (contracts, certain_violation) = match exact {
        Some(holds) => (holds, !holds),
        None => (
            lhs.value <= rhs.value * (1.0 + tol),
            lhs.value > rhs.value * (1.0 + tol) + lhs.abs_error_bound + rhs.abs_error_bound,
        ),
    };
    Ok(NormComparison { lhs, rhs, exact, contracts, certain_violation })
}

fn comparison_record(name: String, f: &Polynomial, c: &NormComparison) -> Record {
    let mut r = Record::new(name)
        .text("f", f)
        .float("lhs_norm_q", c.lhs.value)
        .float("rhs_norm_p", c.rhs.value)
        .float("ratio", if c.rhs.value > 0.0 { c.lhs.value / c.rhs.value } else { f64::NAN })
        .float("lhs_error_bound", c.lhs.abs_error_bound)
        .float("rhs_error_bound", c.rhs.abs_error_bound)
        .text("lhs_method", c.lhs.method.as_str())
        .int("lhs_nodes", c.lhs.samples_or_nodes)
        .flag("contracts", c.contracts);
    if let Some(exact) = c.exact {
        r = r.flag("exact_comparison", exact);
    }
    for (side, est) in [("lhs", &c.lhs), ("rhs", &c.rhs)] {
        if let Some(mc) = est.monte_carlo {
            r = r
                .float(&format!("{side}_monte_carlo"), mc.value)
                .float(&format!("{side}_monte_carlo_std_error"), mc.std_error);
        }
    }
    r
}

#[derive(Debug, Clone)]
pub struct ProbeConfig {
    pub p: Rational,
    pub q: Rational,
    pub params: VarianceParams,
    pub degree_cap: u32,
    pub epsilon_grid: Vec<Rational>,
    pub budget: LpBudget,
    pub tol: f64,
}

/// Fixed test battery: `h_{(n),s}` for `n ≤ degree_cap`, then `1 + ε x1`.
pub fn probe_battery(s: &Variance, degree_cap: u32, epsilon_grid: &[Rational]) -> Vec<(String, Polynomial)> {
    let mut out: Vec<(String, Polynomial)> =
        (0..=degree_cap).map(|n| (format!("h_({n}),s"), hermite(&MultiIndex::from_exponents(&[n]), s))).collect();
    for eps in epsilon_grid {
        let f = &Polynomial::one() + &Polynomial::var(1).scale(eps);
        out.push((format!("1 + eps x1, eps = {eps}"), f));
    }
    out
}

fn check_exponents(p: &Rational, q: &Rational) -> Result<()> {
    if *p <= Rational::one() || *q <= Rational::one() {
        return Err(Error::InvalidArgument(format!("need p > 1 and q > 1, got p = {p}, q = {q}")));
    }
    Ok(())
}

/// Tests `‖heat(f, t)‖_{L^q(μ_{s−t})} ≤ ‖f‖_{L^p(μ_s)}` on the probe battery.
///
/// Under the condition `(q − 1)/(p − 1) ≤ s/(s − t)` every member must
/// contract (pass) or the verdict is fail. Otherwise the battery is searched
/// for a certain violation: found means pass, none found is inconclusive.
pub fn sharpness_probe(cfg: &ProbeConfig) -> Result<Report> {
    check_exponents(&cfg.p, &cfg.q)?;
    let mut report = Report::new("sharpness-probe");
    report.param("p", &cfg.p).param("q", &cfg.q).param("degree_cap", cfg.degree_cap);
    describe_params(&mut report, &cfg.params);
    report
        .param("epsilon_grid", cfg.epsilon_grid.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
        .param("nodes", cfg.budget.nodes)
        .param("samples", cfg.budget.samples)
        .param_value("tol", crate::report::float(cfg.tol));
    report.seed = Some(cfg.budget.seed);
    let condition = nelson_condition(&cfg.p, &cfg.q, &cfg.params);
    report.push(
        Record::new("condition (q-1)/(p-1) <= s/(s-t)")
            .text("lhs", (&cfg.q - Rational::one()) / (&cfg.p - Rational::one()))
            .text("rhs", cfg.params.s() / (cfg.params.s() - cfg.params.t()))
            .flag("holds", condition),
    );
    let mut all_contract = true;
    let mut witness: Option<String> = None;
    for (name, f) in probe_battery(&cfg.params.variance(), cfg.degree_cap, &cfg.epsilon_grid) {
        let c = compare_norms(&f, &cfg.p, &cfg.q, &cfg.params, &cfg.budget, cfg.tol)?;
        all_contract &= c.contracts;
        if c.certain_violation && witness.is_none() {
            witness = Some(name.clone());
        }
        report.push(comparison_record(name, &f, &c));
    }
    report.verdict = match (condition, all_contract, &witness) {
        (true, true, _) => Verdict::Pass,
        (true, false, _) => Verdict::Fail,
        (false, _, Some(_)) => Verdict::Pass,
        (false, _, None) => Verdict::Inconclusive,
    };
    if !condition {
        report.push(
            Record::new("first violating witness")
                .text("f", witness.as_deref().unwrap_or("none found up to degree_cap")),
        );
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub p: Rational,
    pub q: Rational,
    pub params: VarianceParams,
    pub degree_cap: u32,
    /// Variables used for the Hermite part of the grid.
    pub vars: u32,
    /// Number of seeded random polynomials appended to the grid.
    pub random: usize,
    pub budget: LpBudget,
    pub tol: f64,
}

/// Grid: every `h_{α,s}` with `α` in `x1..x_vars`, `|α| ≤ degree_cap`, in
/// graded order, followed by `random` seeded random polynomials.
pub fn scan_grid(cfg: &ScanConfig) -> Result<Vec<(String, Polynomial)>> {
    let basis = GradedBasis::new(cfg.vars, cfg.degree_cap)?;
    let s = cfg.params.variance();
    let mut grid: Vec<(String, Polynomial)> =
        basis.monomials().iter().map(|a| (format!("h_{{{a}}},s"), hermite(a, &s))).collect();
    let mut r = rng(cfg.budget.seed);
    let spec = PolySpec { max_vars: cfg.vars, max_degree: cfg.degree_cap, ..PolySpec::default() };
    for i in 0..cfg.random {
        grid.push((format!("random[{i}]"), random_polynomial(&mut r, &spec)));
    }
    Ok(grid)
}

/// Ratios `‖heat(f, t)‖_{L^q(μ_{s−t})} / ‖f‖_{L^p(μ_s)}` over [`scan_grid`].
///
/// For `p = q = 2` the ratio is the exact Hermite-coefficient formula. The
/// verdict is pass/fail on "every ratio ≤ 1" when the contraction condition
/// holds, and inconclusive when it does not.
pub fn hypercontractivity_scan(cfg: &ScanConfig) -> Result<Report> {
    check_exponents(&cfg.p, &cfg.q)?;
    let mut report = Report::new("hypercontractivity-scan");
    report
        .param("p", &cfg.p)
        .param("q", &cfg.q)
        .param("degree_cap", cfg.degree_cap)
        .param("vars", cfg.vars)
        .param("random", cfg.random)
        .param("nodes", cfg.budget.nodes)
        .param("samples", cfg.budget.samples)
        .param_value("tol", crate::report::float(cfg.tol));
    describe_params(&mut report, &cfg.params);
    report.seed = Some(cfg.budget.seed);
    let condition = nelson_condition(&cfg.p, &cfg.q, &cfg.params);
    report.push(Record::new("condition (q-1)/(p-1) <= s/(s-t)").flag("holds", condition));
    let l2 = cfg.p == int(2) && cfg.q == int(2);
    let mut all_contract = true;
    for (name, f) in scan_grid(cfg)? {
        if f.is_zero() {
            report.push(Record::new(name).text("f", &f).text("ratio", "undefined for f = 0"));
            continue;
        }
        if l2 {
            let sq = l2_contraction_ratio(&f, &cfg.params).expect("f is nonzero");
            let contracts = sq <= Rational::one();
            all_contract &= contracts;
            report.push(
                Record::new(name)
                    .text("f", &f)
                    .text("ratio_squared", &sq)
                    .float("ratio", to_f64(&sq).sqrt())
                    .flag("contracts", contracts),
            );
        } else {
            let c = compare_norms(&f, &cfg.p, &cfg.q, &cfg.params, &cfg.budget, cfg.tol)?;
            all_contract &= c.contracts;
            report.push(comparison_record(name, &f, &c));
        }
    }
    report.verdict = match (condition, all_contract) {
        (true, true) => Verdict::Pass,
        (true, false) => Verdict::Fail,
        (false, _) => Verdict::Inconclusive,
    };
    Ok(report)
}

/// `(f, t, x, nodes)`; `None` nodes means the exact minimum.
pub type ConvolutionCase = (Polynomial, Rational, BTreeMap<u32, f64>, Option<usize>);

/// Points for `convolution-check`: either the single given point or seeded
/// random trials.
pub enum ConvolutionInput {
    Single { f: Polynomial, t: Rational, x: BTreeMap<u32, f64>, nodes: Option<usize> },
    Random { trials: usize, seed: u64 },
}

pub fn convolution_check(input: &ConvolutionInput, tol: f64) -> Result<Report> {
    let mut report = Report::new("convolution-check");
    report.param_value("tol", crate::report::float(tol));
    let mut cases: Vec<ConvolutionCase> = Vec::new();
    match input {
        ConvolutionInput::Single { f, t, x, nodes } => {
            report.param("f", f).param("t", t);
            report.param("x", x.iter().map(|(k, v)| format!("x{k}={v}")).collect::<Vec<_>>().join(","));
            cases.push((f.clone(), t.clone(), x.clone(), *nodes));
        }
        ConvolutionInput::Random { trials, seed } => {
            report.param("random", trials);
            report.seed = Some(*seed);
            cases = random_convolution_cases(*trials, *seed);
        }
    }
    let mut ok = true;
    for (i, (f, t, x, nodes)) in cases.iter().enumerate() {
        let needed = (f.degree().unwrap_or(0) as usize + 2) / 2;
        let c = heat_convolution_oracle(f, t, x, nodes.unwrap_or(needed.max(1)))?;
        let pass = c.relative <= tol;
        ok &= pass;
        report.push(
            Record::new(format!("case {i}"))
                .text("f", f)
                .text("t", t)
                .float("numeric", c.numeric)
                .float("algebraic", c.algebraic)
                .float("discrepancy", c.discrepancy)
                .float("relative", c.relative)
                .int("nodes", c.nodes as u64)
                .flag("within_tol", pass),
        );
    }
    report.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    Ok(report)
}

/// Random `(f, t, x)`: up to 3 variables, degree ≤ 6, `t ∈ (0, 3]`,
/// coordinates in `[−2, 2]`.
pub fn random_convolution_cases(trials: usize, seed: u64) -> Vec<ConvolutionCase> {
    let mut r = rng(seed);
    let spec = PolySpec { max_vars: 3, max_degree: 6, ..PolySpec::default() };
    (0..trials)
        .map(|_| {
            let f = random_polynomial(&mut r, &spec);
            let t = Rational::new(r.random_range(1i64..=12).into(), 4.into());
            let x = (1..=3).map(|v| (v, r.random_range(-8i32..=8) as f64 / 4.0)).collect();
            (f, t, x, None)
        })
        .collect()
}
