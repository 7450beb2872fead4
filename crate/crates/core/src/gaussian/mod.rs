// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Integration against finite-dimensional marginals of the Gaussian measure
//! `μ_s`, the mean-zero product Gaussian with `Var(x_k) = s` for every
//! coordinate.
//!
//! Exact quantities (moments, inner products, even-power norms) are computed
//! as rationals from the moment formula. Everything else goes through tensor
//! Gauss–Hermite quadrature, with a seeded Monte Carlo cross-check where the
//! quadrature is not exact.

mod lp;
mod moments;
mod quadrature;

use num_traits::Signed;

pub use lp::{char_check, lp_norm, lp_power_exact, CharCheck, LpBudget, LpEstimate, LpMethod, MonteCarloCheck};
pub use moments::{expectation, gaussian_moment, inner_product, l2_norm_squared};
pub use quadrature::{tensor_integrate, GaussHermite, DEFAULT_NODE_CAP};

use crate::error::{invalid, Result};
use crate::rational::{to_f64, Rational};

/// Coordinate variance `s > 0` of `μ_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variance(Rational);

impl Variance {
    pub fn new(s: Rational) -> Result<Self> {
        if !s.is_positive() {
            return Err(invalid(format!("variance must be positive, got {s}")));
        }
        Ok(Self(s))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.0)
    }

    /// Standard deviation `√s` as a float.
    pub fn std_dev(&self) -> f64 {
        self.to_f64().sqrt()
    }
}

impl TryFrom<Rational> for Variance {
    type Error = crate::Error;
    fn try_from(s: Rational) -> Result<Self> {
        Self::new(s)
    }
}
