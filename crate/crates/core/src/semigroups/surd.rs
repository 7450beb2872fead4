// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::poly::Polynomial;
use crate::rational::{exact_sqrt, to_f64, Rational};

/// `rational + √radicand · surd`, a polynomial whose coefficients lie in
/// `Q(√radicand)`.
///
/// Produced by dilations and Hermite semigroups with `λ = √λ²` irrational.
/// When the radicand is a rational square the surd part is folded into the
/// rational part, so two values are equal iff both parts are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdPolynomial {
    pub rational: Polynomial,
    pub surd: Polynomial,
    pub radicand: Rational,
}

impl SurdPolynomial {
    pub fn new(rational: Polynomial, surd: Polynomial, radicand: Rational) -> Self {
        match exact_sqrt(&radicand) {
            Some(root) => Self { rational: &rational + &surd.scale(&root), surd: Polynomial::zero(), radicand },
            None => Self { rational, surd, radicand },
        }
    }

    /// `Σ_d λ^d f_d` where `f_d` is the degree-`d` part of `f` and `λ² = lambda_sq`.
    pub(crate) fn from_graded(f: &Polynomial, lambda_sq: &Rational) -> Self {
        let scaled = |parity: u32| {
            Polynomial::from_terms(
                f.terms()
                    .filter(|(a, _)| a.degree() % 2 == parity)
                    .map(|(a, c)| (a.clone(), c * num_traits::pow(lambda_sq.clone(), (a.degree() / 2) as usize))),
            )
        };
        Self::new(scaled(0), scaled(1), lambda_sq.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.radicand, other.radicand);
        Self::new(&self.rational - &other.rational, &self.surd - &other.surd, self.radicand.clone())
    }

    /// Floating coefficients, for reporting.
    pub fn float_coefficients(&self) -> Vec<(String, f64)> {
        let root = to_f64(&self.radicand).sqrt();
        let combined: BTreeMap<_, f64> = self
            .rational
            .terms()
            .map(|(a, c)| (a.clone(), to_f64(c)))
            .chain(self.surd.terms().map(|(a, c)| (a.clone(), root * to_f64(c))))
            .fold(BTreeMap::new(), |mut m, (a, c)| {
                *m.entry(a).or_insert(0.0) += c;
                m
            });
        combined.into_iter().rev().map(|(a, c)| (a.to_string(), c)).collect()
    }
}

impl fmt::Display for SurdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "sqrt({}) * ({})", self.radicand, self.surd)
        } else {
            write!(f, "{} + sqrt({}) * ({})", self.rational, self.radicand, self.surd)
        }
    }
}

impl From<Polynomial> for SurdPolynomial {
    fn from(p: Polynomial) -> Self {
        Self { rational: p, surd: Polynomial::zero(), radicand: Rational::zero() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn folds_perfect_squares() {
        let f: Polynomial = "x1^3 + x1^2 + x1 + 1".parse().unwrap();
        let d = SurdPolynomial::from_graded(&f, &ratio(1, 4));
        assert!(d.is_rational());
        assert_eq!(d.rational, "1/8 x1^3 + 1/4 x1^2 + 1/2 x1 + 1".parse().unwrap());
    }

    #[test]
    fn keeps_irrational_part() {
        let f: Polynomial = "x1^3 + x1^2 + x1 + 1".parse().unwrap();
        let d = SurdPolynomial::from_graded(&f, &ratio(1, 2));
        assert_eq!(d.rational, "1/2 x1^2 + 1".parse().unwrap());
        assert_eq!(d.surd, "1/2 x1^3 + x1".parse().unwrap());
        assert_eq!(d.to_string(), "1/2 x1^2 + 1 + sqrt(1/2) * (1/2 x1^3 + x1)");
        let floats = d.float_coefficients();
        assert_eq!(floats[0].0, "x1^3");
        assert!((floats[0].1 - 0.5f64.powf(1.5)).abs() < 1e-15);
    }
}
