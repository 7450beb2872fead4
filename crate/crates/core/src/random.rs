// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Seedable generators for test polynomials and multi-indices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{MultiIndex, Polynomial};
use crate::rational::Rational;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of random polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolySpec {
    pub max_vars: u32,
    pub max_degree: u32,
    pub max_terms: usize,
    /// Numerators are drawn from `-max_numer..=max_numer`.
    pub max_numer: i64,
    /// Denominators are drawn from `1..=max_denom`.
    pub max_denom: i64,
}

impl Default for PolySpec {
    fn default() -> Self {
        Self { max_vars: 4, max_degree: 8, max_terms: 6, max_numer: 9, max_denom: 4 }
    }
}

/// A multi-index in `x1..x_{max_vars}` with degree at most `max_degree`.
pub fn random_multi_index<R: Rng>(rng: &mut R, max_vars: u32, max_degree: u32) -> MultiIndex {
    let degree = rng.random_range(0..=max_degree);
    let mut exps = vec![0u32; max_vars as usize];
    for _ in 0..degree {
        exps[rng.random_range(0..max_vars as usize)] += 1;
    }
    MultiIndex::from_exponents(&exps)
}

pub fn random_rational<R: Rng>(rng: &mut R, max_numer: i64, max_denom: i64) -> Rational {
    Rational::new(rng.random_range(-max_numer..=max_numer).into(), rng.random_range(1..=max_denom).into())
}

/// Between one and `max_terms` random terms; may cancel down to fewer.
pub fn random_polynomial<R: Rng>(rng: &mut R, spec: &PolySpec) -> Polynomial {
    let terms = rng.random_range(1..=spec.max_terms);
    Polynomial::from_terms((0..terms).map(|_| {
        (random_multi_index(rng, spec.max_vars, spec.max_degree), random_rational(rng, spec.max_numer, spec.max_denom))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let spec = PolySpec::default();
        let a: Vec<Polynomial> = (0..10)
            .map({
                let mut r = rng(7);
                move |_| random_polynomial(&mut r, &spec)
            })
            .collect();
        let b: Vec<Polynomial> = (0..10)
            .map({
                let mut r = rng(7);
                move |_| random_polynomial(&mut r, &spec)
            })
            .collect();
        assert_eq!(a, b);
        for p in &a {
            assert!(p.degree().unwrap_or(0) <= 8);
            assert!(p.active_vars().iter().all(|&v| v <= 4));
        }
    }
}
