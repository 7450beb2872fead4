// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use super::hermite::{hermite, hermite_semigroup_surd};
use super::ops::{dilate_surd, euler_d, heat, laplacian, number_op};
use super::params::VarianceParams;
use super::surd::SurdPolynomial;
use crate::gaussian::Variance;
use crate::poly::{MultiIndex, Polynomial};
use crate::rational::Rational;

/// Outcome of an exact identity check. `witness = lhs − rhs`, so `holds` is
/// true exactly when the witness is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck<T = Polynomial> {
    pub holds: bool,
    pub lhs: T,
    pub rhs: T,
    pub witness: T,
}

impl IdentityCheck {
    fn compare(lhs: Polynomial, rhs: Polynomial) -> Self {
        let witness = &lhs - &rhs;
        Self { holds: witness.is_zero(), lhs, rhs, witness }
    }
}

/// `D_{s,t}(e^{tΔ/2} f) = e^{−τN_s} f` with `λ² = (s − t)/s`.
///
/// Both sides live in `Q(λ)[x]`, so the comparison is exact for irrational
/// `λ` as well.
pub fn verify_ident2(f: &Polynomial, params: &VarianceParams) -> IdentityCheck<SurdPolynomial> {
    let lambda_sq = params.lambda_squared();
    let lhs = dilate_surd(&heat(f, params.t()), &lambda_sq).expect("λ² > 0 by construction");
    let rhs = hermite_semigroup_surd(f, &params.variance(), &lambda_sq).expect("λ² > 0 by construction");
    let witness = lhs.sub(&rhs);
    IdentityCheck { holds: witness.is_zero(), lhs, rhs, witness }
}

/// `[Δ, D] f = 2Δf`.
pub fn verify_commutator(f: &Polynomial) -> IdentityCheck {
    let lhs = &laplacian(&euler_d(f)) - &euler_d(&laplacian(f));
    IdentityCheck::compare(lhs, laplacian(f).scale(&Rational::from_integer(2.into())))
}

/// `[Δ, [Δ, D]] f = ΔΔDf − 2ΔDΔf + DΔΔf = 0`.
pub fn verify_nested_commutator(f: &Polynomial) -> IdentityCheck {
    let dd = laplacian(&laplacian(&euler_d(f)));
    let mid = laplacian(&euler_d(&laplacian(f))).scale(&Rational::from_integer(2.into()));
    let tail = euler_d(&laplacian(&laplacian(f)));
    IdentityCheck::compare(&(&dd - &mid) + &tail, Polynomial::zero())
}

/// `e^{tΔ/2} h_{α,s} = h_{α,s−t}`; needs `t < s`.
pub fn verify_intertwining(alpha: &MultiIndex, s: &Variance, t: &Rational) -> crate::Result<IdentityCheck> {
    let target = Variance::new(s.value() - t)?;
    Ok(IdentityCheck::compare(heat(&hermite(alpha, s), t), hermite(alpha, &target)))
}

/// `N_s h_{α,s} = |α| h_{α,s}`.
pub fn verify_eigen_relation(alpha: &MultiIndex, s: &Variance) -> IdentityCheck {
    let h = hermite(alpha, s);
    let lhs = number_op(&h, s.value());
    IdentityCheck::compare(lhs, h.scale(&Rational::from_integer(alpha.degree().into())))
}
