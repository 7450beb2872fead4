// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::eval::HornerEvaluator;
use super::multi_index::MultiIndex;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite linear combination of monomials with rational coefficients.
///
/// The term map never holds a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(MultiIndex::one(), c)
    }

    pub fn monomial(alpha: MultiIndex, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(alpha, coeff);
        }
        Self { terms }
    }

    /// The coordinate function `x_var`.
    pub fn var(var: u32) -> Self {
        Self::monomial(MultiIndex::var(var), Rational::one())
    }

    /// Sums the given terms, collecting like monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (MultiIndex, Rational)>) -> Self {
        let mut p = Self::zero();
        for (alpha, c) in terms {
            p.add_term(alpha, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, alpha: MultiIndex, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Rational {
        self.terms.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn active_vars(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|a| a.vars()).collect()
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coeff(&MultiIndex::one())),
            _ => None,
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            terms: self.terms.iter().filter(|(a, _)| a.degree() == d).map(|(a, c)| (a.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect() }
    }

    /// Multiplies every coefficient by a function of its multi-index, dropping
    /// any resulting zeros.
    pub fn map_terms(&self, mut f: impl FnMut(&MultiIndex, &Rational) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(a, c)| (a.clone(), f(a, c))))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation; unassigned variables are zero.
    pub fn evaluate_exact(&self, point: &BTreeMap<u32, Rational>) -> Rational {
        let mut acc = Rational::zero();
        for (alpha, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in alpha.entries() {
                match point.get(&v) {
                    Some(x) => term *= num_traits::pow(x.clone(), e as usize),
                    None => {
                        term = Rational::zero();
                        break;
                    }
                }
            }
            acc += term;
        }
        acc
    }

    /// Floating evaluation by nested Horner over the active variables;
    /// unassigned variables are zero.
    pub fn evaluate(&self, point: &BTreeMap<u32, f64>) -> f64 {
        let ev = HornerEvaluator::new(self);
        let coords: Vec<f64> = ev.vars().iter().map(|v| point.get(v).copied().unwrap_or(0.0)).collect();
        ev.eval(&coords)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(a, c)| (a.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::text::parse(s)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_polynomial(self, f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn additive_inverse_is_canonical_zero() {
        let f = p("x1^2");
        let z = &f + &(-&f);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("x1 + x2") * p("x1 - x2"), p("x1^2 - x2^2"));
    }

    #[test]
    fn squaring() {
        let f = p("x1^2 - 1");
        assert_eq!(&f * &f, p("x1^4 - 2 x1^2 + 1"));
        assert_eq!(f.pow(2), p("x1^4 - 2 x1^2 + 1"));
        assert_eq!(f.pow(0), Polynomial::one());
    }

    #[test]
    fn evaluation() {
        let pt = |xs: &[(u32, f64)]| xs.iter().copied().collect::<BTreeMap<_, _>>();
        assert_eq!(p("x1^2 - 4").evaluate(&pt(&[(1, 2.0)])), 0.0);
        assert!((p("x1 x2").evaluate(&pt(&[(1, 3.0), (2, 1.0 / 3.0)])) - 1.0).abs() < 1e-15);
        assert_eq!(p("1").evaluate(&pt(&[])), 1.0);
        let exact: BTreeMap<u32, Rational> = [(1, int(3)), (2, ratio(1, 3))].into_iter().collect();
        assert_eq!(p("x1 x2").evaluate_exact(&exact), int(1));
        assert_eq!(p("x1 x3 + 2").evaluate_exact(&exact), int(2));
    }

    #[test]
    fn structure_queries() {
        let f = p("3 x1^2 x4 - x2 + 7");
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.active_vars().into_iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(f.homogeneous_part(1), p("-x2"));
        assert_eq!(f.as_constant(), None);
        assert_eq!(p("5/2").as_constant(), Some(ratio(5, 2)));
    }
}
