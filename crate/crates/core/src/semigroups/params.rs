// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use num_traits::{One, Signed};

use crate::error::{invalid, Result};
use crate::gaussian::Variance;
use crate::rational::{exact_sqrt, to_f64, Rational};

/// The dilation scale `λ = √((s − t)/s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scale {
    /// `λ` itself, when `(s − t)/s` is the square of a rational.
    Rational(Rational),
    /// Only `λ²` is rational.
    Squared(Rational),
}

/// Variance `s`, heat time `t < s`, and the derived `λ` and `τ = −log λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct VarianceParams {
    s: Rational,
    t: Rational,
    lambda: Scale,
    tau: f64,
}

impl VarianceParams {
    /// Parametrisation by `(s, λ)` with `t = s(1 − λ²)`. Keeps every identity
    /// check in exact rational arithmetic.
    pub fn from_lambda(s: Rational, lambda: Rational) -> Result<Self> {
        check_s(&s)?;
        if !lambda.is_positive() {
            return Err(invalid(format!("λ must be positive, got {lambda}")));
        }
        let lambda_sq = &lambda * &lambda;
        let t = &s * (Rational::one() - &lambda_sq);
        let tau = -to_f64(&lambda).ln();
        Ok(Self { s, t, lambda: Scale::Rational(lambda), tau })
    }

    pub fn from_t(s: Rational, t: Rational) -> Result<Self> {
        check_s(&s)?;
        if t >= s {
            return Err(invalid(format!("heat time t = {t} must be below s = {s}")));
        }
        let lambda_sq = (&s - &t) / &s;
        let tau = 0.5 * to_f64(&(&s / (&s - &t))).ln();
        let lambda = match exact_sqrt(&lambda_sq) {
            Some(l) => Scale::Rational(l),
            None => Scale::Squared(lambda_sq),
        };
        Ok(Self { s, t, lambda, tau })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn variance(&self) -> Variance {
        Variance::new(self.s.clone()).expect("s > 0 checked on construction")
    }

    /// `μ_{s−t}`, the target measure of the heat operator.
    pub fn heat_variance(&self) -> Variance {
        Variance::new(&self.s - &self.t).expect("t < s checked on construction")
    }

    pub fn scale(&self) -> &Scale {
        &self.lambda
    }

    /// `λ` when it is rational.
    pub fn lambda(&self) -> Option<&Rational> {
        match &self.lambda {
            Scale::Rational(l) => Some(l),
            Scale::Squared(_) => None,
        }
    }

    pub fn lambda_squared(&self) -> Rational {
        match &self.lambda {
            Scale::Rational(l) => l * l,
            Scale::Squared(sq) => sq.clone(),
        }
    }

    pub fn lambda_f64(&self) -> f64 {
        match &self.lambda {
            Scale::Rational(l) => to_f64(l),
            Scale::Squared(sq) => to_f64(sq).sqrt(),
        }
    }

    /// `τ = ½ log(s/(s − t))`.
    pub fn tau(&self) -> f64 {
        self.tau
    }
}

fn check_s(s: &Rational) -> Result<()> {
    if !s.is_positive() {
        return Err(invalid(format!("variance s must be positive, got {s}")));
    }
    Ok(())
}

impl fmt::Display for VarianceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lambda {
            Scale::Rational(l) => write!(f, "s = {}, t = {}, λ = {}", self.s, self.t, l),
            Scale::Squared(sq) => write!(f, "s = {}, t = {}, λ² = {}", self.s, self.t, sq),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn lambda_parametrisation() {
        let p = VarianceParams::from_lambda(int(4), ratio(1, 2)).unwrap();
        assert_eq!(p.t(), &int(3));
        assert_eq!(p.lambda(), Some(&ratio(1, 2)));
        assert!(((-p.tau()).exp() - 0.5).abs() < 1e-15);
        assert!(((-2.0 * p.tau()).exp() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn t_parametrisation() {
        let p = VarianceParams::from_t(int(9), int(5)).unwrap();
        assert_eq!(p.lambda(), Some(&ratio(2, 3)));
        let q = VarianceParams::from_t(int(1), ratio(1, 2)).unwrap();
        assert_eq!(q.lambda(), None);
        assert_eq!(q.lambda_squared(), ratio(1, 2));
        assert!(((-q.tau()).exp() - 0.5f64.sqrt()).abs() < 1e-15);
        assert!(q.tau() > 0.0);
        let back = VarianceParams::from_t(int(1), int(-1)).unwrap();
        assert!(back.tau() < 0.0);
    }

    #[test]
    fn rejects_invalid() {
        assert!(VarianceParams::from_t(int(1), int(1)).is_err());
        assert!(VarianceParams::from_t(int(0), int(-1)).is_err());
        assert!(VarianceParams::from_lambda(int(1), int(0)).is_err());
        assert!(VarianceParams::from_lambda(int(-1), int(1)).is_err());
    }
}
