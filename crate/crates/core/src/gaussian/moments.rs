// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Variance;
use crate::poly::{MultiIndex, Polynomial};
use crate::rational::Rational;

/// `E_{μ_s}[x^α] = Π (α_i − 1)!! s^{α_i/2}` when every `α_i` is even, else 0.
pub fn gaussian_moment(alpha: &MultiIndex, s: &Variance) -> Rational {
    let mut table = MomentTable::default();
    match table.parts(alpha.entries(), &[]) {
        Some((df, half)) => Rational::from_integer(df) * num_traits::pow(s.value().clone(), half as usize),
        None => Rational::zero(),
    }
}

/// `E_{μ_s}[f]`.
pub fn expectation(f: &Polynomial, s: &Variance) -> Rational {
    let mut table = MomentTable::default();
    let mut by_half_degree: Vec<Rational> = Vec::new();
    for (alpha, c) in f.terms() {
        if let Some((df, half)) = table.parts(alpha.entries(), &[]) {
            accumulate(&mut by_half_degree, half, c * Rational::from_integer(df));
        }
    }
    resum_powers(by_half_degree, s)
}

/// `⟨f, g⟩ = E_{μ_s}[f g]`, computed term by term without forming `f g`.
pub fn inner_product(f: &Polynomial, g: &Polynomial, s: &Variance) -> Rational {
    let mut table = MomentTable::default();
    let mut by_half_degree: Vec<Rational> = Vec::new();
    for (a, c) in f.terms() {
        for (b, d) in g.terms() {
            if let Some((df, half)) = table.parts(a.entries(), b.entries()) {
                accumulate(&mut by_half_degree, half, c * d * Rational::from_integer(df));
            }
        }
    }
    resum_powers(by_half_degree, s)
}

pub fn l2_norm_squared(f: &Polynomial, s: &Variance) -> Rational {
    inner_product(f, f, s)
}

fn accumulate(sums: &mut Vec<Rational>, k: u32, v: Rational) {
    let k = k as usize;
    if sums.len() <= k {
        sums.resize(k + 1, Rational::zero());
    }
    sums[k] += v;
}

fn resum_powers(sums: Vec<Rational>, s: &Variance) -> Rational {
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for (k, v) in sums.into_iter().enumerate() {
        if k > 0 {
            power *= s.value();
        }
        if !v.is_zero() {
            acc += v * &power;
        }
    }
    acc
}

/// Cache of double factorials `(2k − 1)!!`.
#[derive(Default)]
struct MomentTable {
    double_factorials: Vec<BigInt>,
}

impl MomentTable {
    fn double_factorial(&mut self, exponent: u32) -> &BigInt {
        let k = (exponent / 2) as usize;
        if self.double_factorials.is_empty() {
            self.double_factorials.push(BigInt::one());
        }
        while self.double_factorials.len() <= k {
            let j = self.double_factorials.len();
            let next = &self.double_factorials[j - 1] * BigInt::from(2 * j - 1);
            self.double_factorials.push(next);
        }
        &self.double_factorials[k]
    }

    /// For the exponent vector `a + b`: the product of double factorials and
    /// half the total degree, or `None` if some exponent is odd.
    fn parts(&mut self, a: &[(u32, u32)], b: &[(u32, u32)]) -> Option<(BigInt, u32)> {
        let mut df = BigInt::one();
        let mut half = 0;
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let e = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    i += 1;
                    j += 1;
                    x.1 + y.1
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    i += 1;
                    x.1
                }
                (Some(x), None) => {
                    i += 1;
                    x.1
                }
                (_, Some(y)) => {
                    j += 1;
                    y.1
                }
                (None, None) => unreachable!(),
            };
            if e % 2 == 1 {
                return None;
            }
            half += e / 2;
            if e > 2 {
                df *= self.double_factorial(e);
            }
        }
        Some((df, half))
    }
}
