// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Factorisation `e^{τ(A+B)} = e^{τB} exp(((e^{τα} − 1)/α) A)` for
//! `[A, B] = αA`, applied with `A = sΔ`, `B = −D`, `α = −2`.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_traits::{One, Signed};

use super::basis::GradedBasis;
use super::matrix::{expm_float, operator_matrix, Operator, OperatorMatrix};
use crate::error::{invalid, Result};
use crate::poly::{MultiIndex, Polynomial};
use crate::rational::{ratio, to_f64, Rational};
use crate::semigroups::{hermite_semigroup, VarianceParams};

#[derive(Debug, Clone, PartialEq)]
pub struct BchReport {
    pub vars: u32,
    pub max_degree: u32,
    pub dimension: usize,
    pub s: Rational,
    pub lambda: Rational,
    pub t: Rational,
    pub tau: f64,
    pub tol: f64,
    /// `[sΔ, −D] = −2 sΔ` holds exactly for the matrices.
    pub commutator_holds: bool,
    /// `e^{τ(A+B)}` against `e^{τB} exp(((e^{−2τ} − 1)/(−2)) A)`.
    pub bch_discrepancy: f64,
    /// `e^{−τN_s}` against `e^{−τD} e^{tΔ/2}`.
    pub bch2_discrepancy: f64,
    /// `e^{−τN_s}` (floating) against the exact product `diag(λ^{|α|}) · e^{tΔ/2}`.
    pub float_vs_exact_discrepancy: f64,
    /// `−(e^{−2τ} − 1)/2` in floating point.
    pub scalar_lhs: f64,
    /// `t/(2s)`, exact.
    pub scalar_rhs: Rational,
    pub scalar_exact_holds: bool,
    /// Basis monomials where `diag(λ^{|α|}) e^{tΔ/2} x^α ≠ e^{−τN_s} x^α`.
    pub exact_mismatches: Vec<MultiIndex>,
}

impl BchReport {
    pub fn exact_route_holds(&self) -> bool {
        self.exact_mismatches.is_empty()
    }

    pub fn scalar_discrepancy(&self) -> f64 {
        (self.scalar_lhs - to_f64(&self.scalar_rhs)).abs()
    }

    pub fn passed(&self) -> bool {
        self.commutator_holds
            && self.scalar_exact_holds
            && self.exact_route_holds()
            && self.bch_discrepancy <= self.tol
            && self.bch2_discrepancy <= self.tol
            && self.float_vs_exact_discrepancy <= self.tol
            && self.scalar_discrepancy() <= self.tol
    }
}

/// `max |lhs − rhs| / max |rhs|`, entrywise.
fn relative_max(lhs: &DMatrix<f64>, rhs: &DMatrix<f64>) -> f64 {
    let diff = (lhs - rhs).amax();
    diff / rhs.amax().max(f64::MIN_POSITIVE)
}

/// Runs the floating and exact BCH comparisons on `basis`, with
/// `τ = −log λ` and `t = s(1 − λ²)`.
pub fn bch_check(s: &Rational, lambda: &Rational, basis: &Arc<GradedBasis>, tol: f64) -> Result<BchReport> {
    if !(tol > 0.0) {
        return Err(invalid(format!("tolerance must be positive, got {tol}")));
    }
    if !lambda.is_positive() || lambda > &Rational::one() {
        return Err(invalid(format!("λ must lie in (0, 1], got {lambda}")));
    }
    let params = VarianceParams::from_lambda(s.clone(), lambda.clone())?;
    let tau = params.tau();
    let t = params.t().clone();

    let lap = operator_matrix(&Operator::Laplacian, basis);
    let eul = operator_matrix(&Operator::EulerD, basis);
    let num = operator_matrix(&Operator::NumberOp(s.clone()), basis);

    let a = lap.scale(s);
    let b = eul.scale(&-Rational::one());
    let commutator_holds = a.commutator(&b) == a.scale(&Rational::from_integer((-2).into()));

    let (af, bf) = (a.to_float(), b.to_float());
    let alpha = -2.0;
    let coeff = ((tau * alpha).exp() - 1.0) / alpha;
    let bch_lhs = expm_float(&((&af + &bf) * tau));
    let bch_rhs = expm_float(&(&bf * tau)) * expm_float(&(&af * coeff));
    let bch_discrepancy = relative_max(&bch_lhs, &bch_rhs);

    let (lapf, eulf, numf) = (lap.to_float(), eul.to_float(), num.to_float());
    let semigroup = expm_float(&(&numf * -tau));
    let factored = expm_float(&(&eulf * -tau)) * expm_float(&(&lapf * (to_f64(&t) / 2.0)));
    let bch2_discrepancy = relative_max(&semigroup, &factored);

    let scalar_lhs = -((-2.0 * tau).exp() - 1.0) / 2.0;
    let scalar_rhs = &t / (s * Rational::from_integer(2.into()));
    let scalar_exact_holds = (Rational::one() - lambda * lambda) * ratio(1, 2) == scalar_rhs;

    let dilation = OperatorMatrix::diagonal(basis, |alpha| num_traits::pow(lambda.clone(), alpha.degree() as usize));
    let heat = lap.scale(&(&t * ratio(1, 2))).expm_nilpotent()?;
    let exact = dilation.mul(&heat);
    let variance = params.variance();
    let exact_mismatches = basis
        .monomials()
        .iter()
        .enumerate()
        .filter(|(j, alpha)| {
            let monomial = Polynomial::monomial((*alpha).clone(), Rational::one());
            let expected = hermite_semigroup(&monomial, &variance, lambda).expect("λ > 0");
            exact.column_polynomial(*j) != expected
        })
        .map(|(_, alpha)| alpha.clone())
        .collect();
    let float_vs_exact_discrepancy = relative_max(&semigroup, &exact.to_float());

    Ok(BchReport {
        vars: basis.vars(),
        max_degree: basis.max_degree(),
        dimension: basis.dim(),
        s: s.clone(),
        lambda: lambda.clone(),
        t,
        tau,
        tol,
        commutator_holds,
        bch_discrepancy,
        bch2_discrepancy,
        float_vs_exact_discrepancy,
        scalar_lhs,
        scalar_rhs,
        scalar_exact_holds,
        exact_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn basis(m: u32, n: u32) -> Arc<GradedBasis> {
        Arc::new(GradedBasis::new(m, n).unwrap())
    }

    #[test]
    fn single_variable_quadratic() {
        let r = bch_check(&int(4), &ratio(1, 2), &basis(1, 2), 1e-10).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.t, int(3));
        assert_eq!(r.scalar_rhs, ratio(3, 8));
        assert!((r.scalar_lhs - 0.375).abs() < 1e-15);
    }

    #[test]
    fn identity_at_lambda_one() {
        let r = bch_check(&int(4), &int(1), &basis(2, 4), 1e-10).unwrap();
        assert!(r.passed());
        assert_eq!(r.tau, 0.0);
        assert_eq!(r.bch_discrepancy, 0.0);
        assert_eq!(r.bch2_discrepancy, 0.0);
    }

    #[test]
    fn rejects_bad_arguments() {
        let b = basis(1, 2);
        assert!(bch_check(&int(1), &ratio(1, 2), &b, 0.0).is_err());
        assert!(bch_check(&int(1), &int(2), &b, 1e-10).is_err());
        assert!(bch_check(&int(1), &int(0), &b, 1e-10).is_err());
        assert!(bch_check(&int(0), &ratio(1, 2), &b, 1e-10).is_err());
    }
}
