// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::quadrature::{tensor_integrate, GaussHermite, DEFAULT_NODE_CAP};
use super::{expectation, Variance};
use crate::error::{invalid, Result};
use crate::poly::{HornerEvaluator, Polynomial};
use crate::rational::{to_f64, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpMethod {
    Quadrature,
    MonteCarlo,
}

impl LpMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            LpMethod::Quadrature => "quadrature",
            LpMethod::MonteCarlo => "monte-carlo",
        }
    }
}

/// Work limits for [`lp_norm`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LpBudget {
    /// Gauss–Hermite nodes per active variable when `p` is not an even integer.
    pub nodes: usize,
    /// Monte Carlo samples for the cross-check; 0 disables it.
    pub samples: usize,
    pub seed: u64,
    /// Largest tensor grid accepted.
    pub node_cap: u64,
}

impl Default for LpBudget {
    fn default() -> Self {
        Self { nodes: 200, samples: 1_000_000, seed: 0, node_cap: DEFAULT_NODE_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloCheck {
    pub value: f64,
    pub std_error: f64,
    pub samples: usize,
}

/// Estimate of `‖f‖_{L^p(μ_s)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpEstimate {
    pub value: f64,
    pub abs_error_bound: f64,
    pub method: LpMethod,
    /// Tensor grid size for quadrature, sample count for Monte Carlo.
    pub samples_or_nodes: u64,
    pub monte_carlo: Option<MonteCarloCheck>,
}

fn even_integer(p: f64) -> Option<u32> {
    (p.fract() == 0.0 && p <= u32::MAX as f64 && (p as u32).is_multiple_of(2)).then_some(p as u32)
}

/// `‖f‖_{L^p(μ_s)} = (E_{μ_s}|f|^p)^{1/p}`.
///
/// For even integer `p` the tensor Gauss–Hermite grid is taken large enough
/// to integrate `f^p` exactly and the error bound is 0. Otherwise the grid has
/// `budget.nodes` points per active variable and the error bound is three
/// Monte Carlo standard errors of an independent sampled estimate (or, with
/// `budget.samples == 0`, the change from halving the grid).
pub fn lp_norm(f: &Polynomial, p: f64, s: &Variance, budget: &LpBudget) -> Result<LpEstimate> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(invalid(format!("L^p norms need finite p ≥ 1, got {p}")));
    }
    if budget.nodes == 0 {
        return Err(invalid("node budget must be at least 1"));
    }
    if let Some(c) = f.as_constant() {
        return Ok(LpEstimate {
            value: to_f64(&c.abs()),
            abs_error_bound: 0.0,
            method: LpMethod::Quadrature,
            samples_or_nodes: 1,
            monte_carlo: None,
        });
    }
    let ev = HornerEvaluator::new(f);
    let dims = ev.vars().len();
    let sigma = s.std_dev();
    let degree = f.degree().unwrap_or(0) as f64;

    if let Some(k) = even_integer(p) {
        let nodes = ((p * degree + 1.0) / 2.0).ceil() as usize;
        let rule = GaussHermite::cached(nodes)?;
        let integral = tensor_integrate(&rule, sigma, dims, budget.node_cap, |x| ev.eval(x).powi(k as i32))?;
        return Ok(LpEstimate {
            value: integral.max(0.0).powf(1.0 / p),
            abs_error_bound: 0.0,
            method: LpMethod::Quadrature,
            samples_or_nodes: (nodes as u64).pow(dims as u32),
            monte_carlo: None,
        });
    }

    let rule = GaussHermite::cached(budget.nodes)?;
    let integral = tensor_integrate(&rule, sigma, dims, budget.node_cap, |x| ev.eval(x).abs().powf(p))?;
    let value = integral.max(0.0).powf(1.0 / p);
    let (abs_error_bound, monte_carlo) = if budget.samples > 0 {
        let mc = monte_carlo_norm(&ev, p, sigma, budget.samples, budget.seed);
        (3.0 * mc.std_error, Some(mc))
    } else {
        let coarse = GaussHermite::cached(budget.nodes.div_ceil(2))?;
        let half = tensor_integrate(&coarse, sigma, dims, budget.node_cap, |x| ev.eval(x).abs().powf(p))?;
        ((half.max(0.0).powf(1.0 / p) - value).abs(), None)
    };
    Ok(LpEstimate {
        value,
        abs_error_bound,
        method: LpMethod::Quadrature,
        samples_or_nodes: (budget.nodes as u64).pow(dims as u32),
        monte_carlo,
    })
}

/// Sampled `‖f‖_p` with its delta-method standard error.
fn monte_carlo_norm(ev: &HornerEvaluator, p: f64, sigma: f64, samples: usize, seed: u64) -> MonteCarloCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dims = ev.vars().len();
    let mut x = vec![0.0; dims];
    let (mut mean, mut m2) = (0.0f64, 0.0f64);
    for i in 0..samples {
        for xi in x.iter_mut() {
            let z: f64 = StandardNormal.sample(&mut rng);
            *xi = sigma * z;
        }
        let v = ev.eval(&x).abs().powf(p);
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let n = samples as f64;
    let var = if samples > 1 { m2 / (n - 1.0) } else { 0.0 };
    let se_moment = (var / n).sqrt();
    let value = mean.max(0.0).powf(1.0 / p);
    let std_error = if mean > 0.0 { value / (p * mean) * se_moment } else { 0.0 };
    MonteCarloCheck { value, std_error, samples }
}

/// `E_{μ_s}[f^p]` exactly, for even integer `p`.
pub fn lp_power_exact(f: &Polynomial, p: u32, s: &Variance) -> Result<Rational> {
    if p == 0 || p % 2 == 1 {
        return Err(invalid(format!("exact L^p power needs an even p ≥ 2, got {p}")));
    }
    Ok(expectation(&f.pow(p), s))
}

/// Characteristic-function check of `μ_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharCheck {
    /// Quadrature estimate of `E_{μ_s}[cos(Σ θ_k x_k)]`.
    pub lhs: f64,
    /// `exp(−s Σ θ_k² / 2)`.
    pub rhs: f64,
    pub discrepancy: f64,
}

pub fn char_check(theta: &BTreeMap<u32, f64>, s: &Variance, nodes: usize) -> Result<CharCheck> {
    let active: Vec<f64> = theta.values().copied().filter(|t| *t != 0.0).collect();
    let rule = GaussHermite::cached(nodes)?;
    let lhs = tensor_integrate(&rule, s.std_dev(), active.len(), DEFAULT_NODE_CAP, |x| {
        x.iter().zip(&active).map(|(xi, t)| xi * t).sum::<f64>().cos()
    })?;
    let rhs = (-s.to_f64() * active.iter().map(|t| t * t).sum::<f64>() / 2.0).exp();
    Ok(CharCheck { lhs, rhs, discrepancy: (lhs - rhs).abs() })
}
