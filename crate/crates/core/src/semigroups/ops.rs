// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use num_traits::{One, Zero};

use super::surd::SurdPolynomial;
use crate::error::{invalid, Result};
use crate::poly::Polynomial;
use crate::rational::{ratio, Rational};

/// `Δf = Σ_k ∂²f/∂x_k²`, summed over the active variables of `f`.
pub fn laplacian(f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(f.terms().flat_map(|(alpha, c)| {
        alpha.vars().filter_map(move |v| {
            alpha.second_derivative(v).map(|(k, beta)| (beta, c * Rational::from_integer(k.into())))
        })
    }))
}

/// `Df = Σ_k x_k ∂f/∂x_k`; multiplies each monomial by its degree.
pub fn euler_d(f: &Polynomial) -> Polynomial {
    f.map_terms(|alpha, c| c * Rational::from_integer(alpha.degree().into()))
}

/// `N_s f = Df − sΔf`.
pub fn number_op(f: &Polynomial, s: &Rational) -> Polynomial {
    &euler_d(f) - &laplacian(f).scale(s)
}

/// `e^{tΔ/2} f = Σ_k (t/2)^k Δ^k f / k!`.
///
/// The series terminates because each `Δ` lowers the degree by two. Any
/// rational `t` is accepted; negative `t` is the backward heat operator.
pub fn heat(f: &Polynomial, t: &Rational) -> Polynomial {
    if t.is_zero() {
        return f.clone();
    }
    let half_t = t * ratio(1, 2);
    let mut acc = f.clone();
    let mut term = f.clone();
    let mut k = 1i64;
    loop {
        term = laplacian(&term).scale(&(&half_t / Rational::from_integer(k.into())));
        if term.is_zero() {
            return acc;
        }
        acc = &acc + &term;
        k += 1;
    }
}

/// `f(λx)`: the coefficient of `x^α` is multiplied by `λ^{|α|}`.
pub fn dilate(f: &Polynomial, lambda: &Rational) -> Result<Polynomial> {
    if lambda.is_zero() {
        return Err(invalid("dilation by 0 is not a dilation"));
    }
    if lambda.is_one() {
        return Ok(f.clone());
    }
    Ok(f.map_terms(|alpha, c| c * num_traits::pow(lambda.clone(), alpha.degree() as usize)))
}

/// `f(λx)` for `λ = √λ²`, exact even when `λ` is irrational.
pub fn dilate_surd(f: &Polynomial, lambda_sq: &Rational) -> Result<SurdPolynomial> {
    if lambda_sq <= &Rational::zero() {
        return Err(invalid(format!("dilation needs λ² > 0, got {lambda_sq}")));
    }
    Ok(SurdPolynomial::from_graded(f, lambda_sq))
}
