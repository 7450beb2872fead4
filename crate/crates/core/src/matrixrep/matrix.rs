// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use nalgebra::DMatrix;
use num_traits::{One, Zero};

use super::basis::GradedBasis;
use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial};
use crate::rational::{to_f64, Rational};
use crate::semigroups::{euler_d, laplacian, number_op};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operator {
    Laplacian,
    EulerD,
    /// `N_s = D − sΔ`.
    NumberOp(Rational),
}

/// Dense exact matrix of a linear operator on a [`GradedBasis`].
///
/// Column `j` is the coefficient vector of the operator applied to basis
/// monomial `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    basis: Arc<GradedBasis>,
    entries: Vec<Rational>,
}

pub fn operator_matrix(which: &Operator, basis: &Arc<GradedBasis>) -> OperatorMatrix {
    let apply = |p: &Polynomial| match which {
        Operator::Laplacian => laplacian(p),
        Operator::EulerD => euler_d(p),
        Operator::NumberOp(s) => number_op(p, s),
    };
    OperatorMatrix::from_symbolic(basis, apply).expect("Δ, D and N_s preserve the graded space")
}

impl OperatorMatrix {
    /// Builds the matrix of `op` column by column.
    pub fn from_symbolic(basis: &Arc<GradedBasis>, op: impl Fn(&Polynomial) -> Polynomial) -> Result<Self> {
        let n = basis.dim();
        let mut entries = vec![Rational::zero(); n * n];
        for (j, alpha) in basis.monomials().iter().enumerate() {
            let image = op(&Polynomial::monomial(alpha.clone(), Rational::one()));
            for (beta, c) in image.terms() {
                let i = basis.position(beta).ok_or_else(|| Error::OutsideBasis(beta.to_string()))?;
                entries[i * n + j] = c.clone();
            }
        }
        Ok(Self { basis: basis.clone(), entries })
    }

    pub fn identity(basis: &Arc<GradedBasis>) -> Self {
        Self::diagonal(basis, |_| Rational::one())
    }

    pub fn diagonal(basis: &Arc<GradedBasis>, entry: impl Fn(&MultiIndex) -> Rational) -> Self {
        let n = basis.dim();
        let mut entries = vec![Rational::zero(); n * n];
        for (i, alpha) in basis.monomials().iter().enumerate() {
            entries[i * n + i] = entry(alpha);
        }
        Self { basis: basis.clone(), entries }
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim() + col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.basis, other.basis, "matrices on different bases");
        Self {
            basis: self.basis.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { basis: self.basis.clone(), entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "matrices on different bases");
        let n = self.dim();
        let row_nonzeros: Vec<Vec<usize>> =
            (0..n).map(|k| (0..n).filter(|&j| !other.entries[k * n + j].is_zero()).collect()).collect();
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for &j in &row_nonzeros[k] {
                    entries[i * n + j] += a * &other.entries[k * n + j];
                }
            }
        }
        Self { basis: self.basis.clone(), entries }
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let v = self.basis.coefficient_vector(p)?;
        let n = self.dim();
        let out: Vec<Rational> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !v[j].is_zero())
                    .fold(Rational::zero(), |acc, j| acc + &self.entries[i * n + j] * &v[j])
            })
            .collect();
        Ok(self.basis.polynomial(&out))
    }

    /// Column `j` read back as a polynomial.
    pub fn column_polynomial(&self, j: usize) -> Polynomial {
        let n = self.dim();
        let col: Vec<Rational> = (0..n).map(|i| self.entries[i * n + j].clone()).collect();
        self.basis.polynomial(&col)
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| i == j || self.entries[i * n + j].is_zero()))
    }

    /// Zero on and below the diagonal.
    pub fn is_strictly_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..=i).all(|j| self.entries[i * n + j].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.entries[i * n + j].is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<Rational> {
        (0..self.dim()).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn to_float(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| to_f64(&self.entries[i * n + j]))
    }

    /// `exp(self)` as a terminating Taylor sum. Requires a nilpotent matrix.
    pub fn expm_nilpotent(&self) -> Result<Self> {
        let n = self.dim();
        let mut acc = Self::identity(&self.basis);
        let mut term = acc.clone();
        for k in 1..=n + 1 {
            term = term.mul(self).scale(&Rational::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc.add(&term);
        }
        Err(Error::NotNilpotent)
    }
}

/// Floating matrix exponential (scaling and squaring with Padé approximants).
pub fn expm_float(m: &DMatrix<f64>) -> DMatrix<f64> {
    m.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::semigroups::heat;

    fn basis(m: u32, n: u32) -> Arc<GradedBasis> {
        Arc::new(GradedBasis::new(m, n).unwrap())
    }

    #[test]
    fn euler_is_degree_diagonal() {
        let d = operator_matrix(&Operator::EulerD, &basis(1, 2));
        assert!(d.is_diagonal());
        assert_eq!(d.diagonal_entries(), vec![int(0), int(1), int(2)]);
    }

    #[test]
    fn laplacian_single_entry() {
        let l = operator_matrix(&Operator::Laplacian, &basis(1, 2));
        assert_eq!(l.get(0, 2), &int(2));
        assert_eq!(l.entries.iter().filter(|e| !e.is_zero()).count(), 1);
        assert!(l.is_strictly_upper_triangular());
    }

    #[test]
    fn number_op_is_assembled_entrywise() {
        let b = basis(2, 4);
        let s = ratio(3, 2);
        let n = operator_matrix(&Operator::NumberOp(s.clone()), &b);
        let d = operator_matrix(&Operator::EulerD, &b);
        let l = operator_matrix(&Operator::Laplacian, &b);
        assert_eq!(n, d.sub(&l.scale(&s)));
        assert!(n.is_upper_triangular());
    }

    #[test]
    fn exact_exponentials() {
        let b = basis(1, 2);
        let zero = OperatorMatrix::diagonal(&b, |_| int(0));
        assert_eq!(zero.expm_nilpotent().unwrap(), OperatorMatrix::identity(&b));
        let t = ratio(7, 3);
        let l = operator_matrix(&Operator::Laplacian, &b).scale(&(&t / int(2)));
        let x2: Polynomial = "x1^2".parse().unwrap();
        assert_eq!(l.expm_nilpotent().unwrap().apply(&x2).unwrap(), heat(&x2, &t));
        let d = operator_matrix(&Operator::EulerD, &b);
        assert_eq!(d.expm_nilpotent(), Err(Error::NotNilpotent));
    }

    #[test]
    fn float_exponential_of_diagonal() {
        let d = operator_matrix(&Operator::EulerD, &basis(1, 2)).to_float();
        let e = expm_float(&d);
        for (i, want) in [1.0, std::f64::consts::E, std::f64::consts::E.powi(2)].iter().enumerate() {
            assert!((e[(i, i)] - want).abs() <= 1e-13 * want);
        }
        assert_eq!(e[(0, 1)], 0.0);
    }
}
