// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::poly::{MultiIndex, Polynomial};
use crate::rational::Rational;

/// Largest basis accepted; dense exact matrices beyond this are impractical.
pub const MAX_DIMENSION: usize = 5000;

/// All monomials in `x1..xm` of degree at most `n`, in ascending graded-lex
/// order. Its size is `C(m + n, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    vars: u32,
    max_degree: u32,
    monomials: Vec<MultiIndex>,
    index: HashMap<MultiIndex, usize>,
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

impl GradedBasis {
    pub fn new(vars: u32, max_degree: u32) -> Result<Self> {
        if vars == 0 {
            return Err(invalid("a graded basis needs at least one variable"));
        }
        let dim = binomial(vars as u128 + max_degree as u128, max_degree as u128);
        if dim > MAX_DIMENSION as u128 {
            return Err(Error::BasisTooLarge { dim, cap: MAX_DIMENSION });
        }
        let mut monomials = Vec::with_capacity(dim as usize);
        let mut exps = vec![0u32; vars as usize];
        enumerate(&mut exps, 0, max_degree, &mut monomials);
        monomials.sort();
        let index = monomials.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
        Ok(Self { vars, max_degree, monomials, index })
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.monomials
    }

    pub fn position(&self, alpha: &MultiIndex) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    pub fn coefficient_vector(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (alpha, c) in p.terms() {
            let i = self.position(alpha).ok_or_else(|| Error::OutsideBasis(alpha.to_string()))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn polynomial(&self, coeffs: &[Rational]) -> Polynomial {
        Polynomial::from_terms(self.monomials.iter().cloned().zip(coeffs.iter().cloned()))
    }
}

fn enumerate(exps: &mut [u32], pos: usize, budget: u32, out: &mut Vec<MultiIndex>) {
    if pos == exps.len() {
        out.push(MultiIndex::from_exponents(exps));
        return;
    }
    for e in 0..=budget {
        exps[pos] = e;
        enumerate(exps, pos + 1, budget - e, out);
    }
    exps[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_are_binomial() {
        for (m, n, dim) in [(1, 2, 3), (2, 4, 15), (2, 6, 28), (3, 8, 165), (4, 0, 1)] {
            assert_eq!(GradedBasis::new(m, n).unwrap().dim(), dim);
        }
    }

    #[test]
    fn order_is_graded() {
        let b = GradedBasis::new(2, 2).unwrap();
        let names: Vec<String> = b.monomials().iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["1", "x2", "x1", "x2^2", "x1 x2", "x1^2"]);
        assert!(b.monomials().windows(2).all(|w| w[0].degree() <= w[1].degree()));
    }

    #[test]
    fn caps_and_errors() {
        assert!(matches!(GradedBasis::new(10, 10), Err(Error::BasisTooLarge { .. })));
        assert!(GradedBasis::new(0, 3).is_err());
        let b = GradedBasis::new(1, 2).unwrap();
        assert!(matches!(b.coefficient_vector(&"x1^3".parse().unwrap()), Err(Error::OutsideBasis(_))));
        assert!(b.coefficient_vector(&"x2".parse().unwrap()).is_err());
        let p: Polynomial = "x1^2 - 3".parse().unwrap();
        assert_eq!(b.polynomial(&b.coefficient_vector(&p).unwrap()), p);
    }
}
