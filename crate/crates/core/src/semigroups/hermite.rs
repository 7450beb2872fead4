// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::ops::heat;
use super::params::VarianceParams;
use super::surd::SurdPolynomial;
use crate::error::{invalid, Result};
use crate::gaussian::Variance;
use crate::poly::{MultiIndex, Polynomial};
use crate::rational::Rational;

/// `h_{α,s} = e^{−sΔ/2} x^α`; monic with leading monomial `x^α`.
pub fn hermite(alpha: &MultiIndex, s: &Variance) -> Polynomial {
    heat(&Polynomial::monomial(alpha.clone(), Rational::from_integer(1.into())), &-s.value())
}

/// Coefficients of a polynomial in the basis `{h_{α,s}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteExpansion {
    base_variance: Variance,
    coeffs: BTreeMap<MultiIndex, Rational>,
}

impl HermiteExpansion {
    pub fn base_variance(&self) -> &Variance {
        &self.base_variance
    }

    pub fn coeffs(&self) -> &BTreeMap<MultiIndex, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Rational {
        self.coeffs.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ c_α h_{α,s}`.
    pub fn resum(&self) -> Polynomial {
        self.coeffs
            .iter()
            .fold(Polynomial::zero(), |acc, (alpha, c)| &acc + &hermite(alpha, &self.base_variance).scale(c))
    }

    /// `Σ c_α² α! v^{|α|}`: the squared norm in `L²(μ_v)` of `Σ c_α h_{α,v}`.
    pub fn weighted_norm_squared(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .map(|(alpha, c)| {
                c * c * Rational::from_integer(alpha.factorial()) * num_traits::pow(v.clone(), alpha.degree() as usize)
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

/// Expansion of `f` in `{h_{α,s}}`: since `e^{sΔ/2} h_{α,s} = x^α`, the
/// coefficients are the monomial coefficients of `e^{sΔ/2} f`.
pub fn hermite_expand(f: &Polynomial, s: &Variance) -> HermiteExpansion {
    let lifted = heat(f, s.value());
    HermiteExpansion { base_variance: s.clone(), coeffs: lifted.terms().map(|(a, c)| (a.clone(), c.clone())).collect() }
}

/// `e^{−τN_s} f` with `λ = e^{−τ}`: scales the `h_{α,s}` coefficient by `λ^{|α|}`.
pub fn hermite_semigroup(f: &Polynomial, s: &Variance, lambda: &Rational) -> Result<Polynomial> {
    if !lambda.is_positive() {
        return Err(invalid(format!("λ = e^(−τ) must be positive, got {lambda}")));
    }
    let exp = hermite_expand(f, s);
    let scaled = HermiteExpansion {
        base_variance: s.clone(),
        coeffs: exp
            .coeffs
            .into_iter()
            .map(|(a, c)| {
                let k = a.degree() as usize;
                (a, c * num_traits::pow(lambda.clone(), k))
            })
            .collect(),
    };
    Ok(scaled.resum())
}

/// `e^{−τN_s} f` with `λ = √λ²`, exact for irrational `λ`.
pub fn hermite_semigroup_surd(f: &Polynomial, s: &Variance, lambda_sq: &Rational) -> Result<SurdPolynomial> {
    if !lambda_sq.is_positive() {
        return Err(invalid(format!("λ² must be positive, got {lambda_sq}")));
    }
    let exp = hermite_expand(f, s);
    let mut even = Polynomial::zero();
    let mut odd = Polynomial::zero();
    for (alpha, c) in exp.coeffs() {
        let d = alpha.degree();
        let term = hermite(alpha, s).scale(&(c * num_traits::pow(lambda_sq.clone(), (d / 2) as usize)));
        if d % 2 == 0 {
            even = &even + &term;
        } else {
            odd = &odd + &term;
        }
    }
    Ok(SurdPolynomial::new(even, odd, lambda_sq.clone()))
}

/// `‖e^{tΔ/2} f‖²_{L²(μ_{s−t})} / ‖f‖²_{L²(μ_s)}` from the Hermite
/// coefficients of `f`; `None` for `f = 0`.
pub fn l2_contraction_ratio(f: &Polynomial, params: &VarianceParams) -> Option<Rational> {
    let exp = hermite_expand(f, &params.variance());
    let den = exp.weighted_norm_squared(params.s());
    if den.is_zero() {
        return None;
    }
    Some(exp.weighted_norm_squared(&(params.s() - params.t())) / den)
}
