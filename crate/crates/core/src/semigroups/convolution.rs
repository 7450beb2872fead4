// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use num_traits::Signed;

use super::ops::heat;
use crate::error::{invalid, Result};
use crate::gaussian::{tensor_integrate, GaussHermite, DEFAULT_NODE_CAP};
use crate::poly::{HornerEvaluator, Polynomial};
use crate::rational::{to_f64, Rational};

/// Heat kernel convolution against the algebraic heat operator at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvolutionCheck {
    /// Gauss–Hermite estimate of `E[f(x + z)]`, `z ~ N(0, t I)`.
    pub numeric: f64,
    /// `(e^{tΔ/2} f)(x)`.
    pub algebraic: f64,
    pub discrepancy: f64,
    /// `discrepancy / max(|algebraic|, 1)`.
    pub relative: f64,
    pub nodes: usize,
}

/// Compares `∫ f(x + z) p_t(z) dz` with the terminating heat series at `x`.
///
/// `nodes` is the rule size per active variable; fewer than
/// `⌈(deg f + 1)/2⌉` is rejected since the rule would not be exact.
pub fn heat_convolution_oracle(
    f: &Polynomial,
    t: &Rational,
    x: &BTreeMap<u32, f64>,
    nodes: usize,
) -> Result<ConvolutionCheck> {
    if !t.is_positive() {
        return Err(invalid(format!("the heat kernel needs t > 0, got {t}")));
    }
    let degree = f.degree().unwrap_or(0) as usize;
    let needed = (degree + 2) / 2;
    if nodes < needed.max(1) {
        return Err(invalid(format!("degree {degree} needs at least {needed} nodes per variable, got {nodes}")));
    }
    let ev = HornerEvaluator::new(f);
    let base: Vec<f64> = ev.vars().iter().map(|v| x.get(v).copied().unwrap_or(0.0)).collect();
    let rule = GaussHermite::cached(nodes)?;
    let mut shifted = base.clone();
    let numeric = tensor_integrate(&rule, to_f64(t).sqrt(), base.len(), DEFAULT_NODE_CAP, |z| {
        for ((s, b), zi) in shifted.iter_mut().zip(&base).zip(z) {
            *s = b + zi;
        }
        ev.eval(&shifted)
    })?;
    let algebraic = heat(f, t).evaluate(x);
    let discrepancy = (numeric - algebraic).abs();
    Ok(ConvolutionCheck { numeric, algebraic, discrepancy, relative: discrepancy / algebraic.abs().max(1.0), nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn at(pts: &[(u32, f64)]) -> BTreeMap<u32, f64> {
        pts.iter().copied().collect()
    }

    #[test]
    fn examples() {
        let c = heat_convolution_oracle(&"x1^2".parse().unwrap(), &int(1), &at(&[]), 2).unwrap();
        assert!((c.numeric - 1.0).abs() < 1e-14 && c.algebraic == 1.0);
        let c = heat_convolution_oracle(&"x1".parse().unwrap(), &int(3), &at(&[]), 1).unwrap();
        assert!(c.numeric.abs() < 1e-15 && c.algebraic == 0.0);
        let c = heat_convolution_oracle(&"x1^4".parse().unwrap(), &int(2), &at(&[(1, 1.0)]), 3).unwrap();
        assert_eq!(c.algebraic, 25.0);
        assert!(c.relative < 1e-13);
    }

    #[test]
    fn rejects_too_few_nodes_and_bad_t() {
        let f: Polynomial = "x1^4 x2".parse().unwrap();
        assert!(heat_convolution_oracle(&f, &int(1), &at(&[]), 2).is_err());
        assert!(heat_convolution_oracle(&f, &int(1), &at(&[]), 3).is_ok());
        assert!(heat_convolution_oracle(&f, &int(0), &at(&[]), 3).is_err());
    }
}
