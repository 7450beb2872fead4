// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Helpers around [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"-2.75"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = |message: &str| Error::Parse { position: 0, message: format!("{message}: {text:?}") };
    if s.is_empty() {
        return Err(err("empty rational"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err("bad numerator"))?;
        let d: BigInt = d.trim().parse().map_err(|_| err("bad denominator"))?;
        if !d.is_positive() {
            return Err(err("denominator must be a positive integer"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() && whole_digits.is_empty()
            || !frac.chars().all(|c| c.is_ascii_digit())
            || !whole_digits.chars().all(|c| c.is_ascii_digit())
        {
            return Err(err("bad decimal"));
        }
        let digits = format!("{whole_digits}{frac}");
        let mut numer: BigInt =
            if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| err("bad decimal"))? };
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10u32), frac.len());
        return Ok(Rational::new(numer, denom));
    }
    let n: BigInt = s.parse().map_err(|_| err("bad integer"))?;
    Ok(Rational::from_integer(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational square root, when `r` is the square of a rational.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

pub fn pow(r: &Rational, k: u32) -> Rational {
    num_traits::pow(r.clone(), k as usize)
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("2.75").unwrap(), ratio(11, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&ratio(4, 9)), Some(ratio(2, 3)));
        assert_eq!(exact_sqrt(&ratio(1, 2)), None);
        assert_eq!(exact_sqrt(&int(0)), Some(int(0)));
    }
}
