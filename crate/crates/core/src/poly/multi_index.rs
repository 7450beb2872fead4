// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{invalid, Result};

/// Exponent vector of a monomial `x^α`, stored sparsely.
///
/// Entries are `(variable, exponent)` pairs with strictly increasing variable
/// indices (starting at 1) and positive exponents. The empty list is the
/// monomial `1`.
///
/// Ordering is graded lexicographic: total degree first, then the exponent of
/// `x1`, then `x2`, and so on, so `x1^2 > x1 x2 > x2^2 > x1 > x2 > 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex {
    entries: Vec<(u32, u32)>,
}

impl MultiIndex {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single variable `x_var`.
    pub fn var(var: u32) -> Self {
        assert!(var > 0, "variable indices start at 1");
        Self { entries: vec![(var, 1)] }
    }

    /// Builds from arbitrary `(variable, exponent)` pairs. Zero exponents are
    /// dropped and repeated variables have their exponents added.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for (v, e) in pairs {
            if v == 0 {
                return Err(invalid("variable index 0; variables are numbered from 1"));
            }
            if e > 0 {
                entries.push((v, e));
            }
        }
        entries.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(entries.len());
        for (v, e) in entries {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le = le.checked_add(e).ok_or_else(|| invalid("exponent overflow"))?,
                _ => merged.push((v, e)),
            }
        }
        Ok(Self { entries: merged })
    }

    /// Dense exponent vector `(α1, α2, ...)`; zeros are allowed.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let entries = exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i as u32 + 1, e)).collect();
        Self { entries }
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.entries.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.entries.binary_search_by_key(&var, |&(v, _)| v).map_or(0, |i| self.entries[i].1)
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    pub fn max_var(&self) -> Option<u32> {
        self.entries.last().map(|&(v, _)| v)
    }

    /// `α! = α1! α2! ...`
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &(_, e) in &self.entries {
            for k in 2..=e {
                acc *= k;
            }
        }
        acc
    }

    /// Exponent-wise sum, i.e. the index of `x^α x^β`.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self { entries: out }
    }

    /// `∂/∂x_var x^α = factor · x^β`, or `None` when the derivative vanishes.
    pub fn derivative(&self, var: u32) -> Option<(u32, Self)> {
        let pos = self.entries.binary_search_by_key(&var, |&(v, _)| v).ok()?;
        let e = self.entries[pos].1;
        let mut entries = self.entries.clone();
        if e == 1 {
            entries.remove(pos);
        } else {
            entries[pos].1 = e - 1;
        }
        Some((e, Self { entries }))
    }

    /// `∂²/∂x_var² x^α = factor · x^β`, or `None` when it vanishes.
    pub fn second_derivative(&self, var: u32) -> Option<(u32, Self)> {
        let pos = self.entries.binary_search_by_key(&var, |&(v, _)| v).ok()?;
        let e = self.entries[pos].1;
        if e < 2 {
            return None;
        }
        let mut entries = self.entries.clone();
        if e == 2 {
            entries.remove(pos);
        } else {
            entries[pos].1 = e - 2;
        }
        Some((e * (e - 1), Self { entries }))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.entries, &other.entries);
            for (x, y) in a.iter().zip(b) {
                let ord = match x.0.cmp(&y.0) {
                    // x has a positive power of a variable y lacks
                    Ordering::Less => Ordering::Greater,
                    Ordering::Greater => Ordering::Less,
                    Ordering::Equal => x.1.cmp(&y.1),
                };
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (i, &(v, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiIndex({self})")
    }
}
