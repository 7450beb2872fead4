// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Text form of polynomials.
//!
//! ```text
//! polynomial := [sign] term (sign term)*
//! term       := [rational] factor*        (at least one of the two)
//! factor     := "x" <positive int> ["^" <positive int>]
//! rational   := <int> ["/" <positive int>]
//! sign       := "+" | "-" | "−"
//! ```
//!
//! Whitespace between tokens is ignored. Output lists terms in descending
//! graded-lex order, omits unit coefficients on non-constant terms and prints
//! the zero polynomial as `0`, e.g. `1/4 x1^2 x2 - x3 + 3`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{MultiIndex, Polynomial};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(u32),
    Slash,
    Caret,
    Plus,
    Minus,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |start: usize| {
        let mut end = start;
        while end < chars.len() && chars[end].is_ascii_digit() {
            end += 1;
        }
        end
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' | '−' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            'x' => {
                let end = digits(i + 1);
                if end == i + 1 {
                    return Err(syntax(i, "expected a variable index after 'x'"));
                }
                let s: String = chars[i + 1..end].iter().collect();
                let v: u32 = s.parse().map_err(|_| syntax(i + 1, "variable index too large"))?;
                if v == 0 {
                    return Err(syntax(i + 1, "variable index must be positive"));
                }
                out.push((i, Token::Var(v)));
                i = end;
            }
            c if c.is_ascii_digit() => {
                let end = digits(i);
                let s: String = chars[i..end].iter().collect();
                out.push((i, Token::Int(s.parse().expect("ascii digits"))));
                i = end;
            }
            other => return Err(syntax(i, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn positive_int(&mut self, what: &str) -> Result<BigInt> {
        let at = self.offset();
        match self.tokens.get(self.pos) {
            Some((_, Token::Int(n))) => {
                let n = n.clone();
                self.pos += 1;
                if n.is_zero() {
                    return Err(syntax(at, format!("{what} must be positive")));
                }
                Ok(n)
            }
            _ => Err(syntax(at, format!("expected {what}"))),
        }
    }

    fn term(&mut self) -> Result<(Rational, MultiIndex)> {
        let start = self.offset();
        let mut coeff = Rational::one();
        let mut seen_coeff = false;
        if let Some(Token::Int(n)) = self.peek() {
            let n = n.clone();
            self.pos += 1;
            seen_coeff = true;
            coeff = Rational::from_integer(n);
            if self.peek() == Some(&Token::Slash) {
                self.pos += 1;
                let d = self.positive_int("a positive denominator")?;
                coeff /= Rational::from_integer(d);
            }
        }
        let mut pairs = Vec::new();
        while let Some(Token::Var(v)) = self.peek() {
            let v = *v;
            self.pos += 1;
            let mut e = 1u32;
            if self.peek() == Some(&Token::Caret) {
                self.pos += 1;
                let at = self.offset();
                e = self
                    .positive_int("a positive exponent")?
                    .to_u32()
                    .ok_or_else(|| syntax(at, "exponent too large"))?;
            }
            pairs.push((v, e));
        }
        if !seen_coeff && pairs.is_empty() {
            return Err(syntax(start, "expected a term"));
        }
        let alpha = MultiIndex::from_pairs(pairs).map_err(|e| syntax(start, e.to_string()))?;
        Ok((coeff, alpha))
    }
}

pub fn parse(text: &str) -> Result<Polynomial> {
    let tokens = lex(text)?;
    let end = text.chars().count();
    if tokens.is_empty() {
        return Err(syntax(0, "empty polynomial"));
    }
    let mut p = Parser { tokens, pos: 0, end };
    let mut out = Polynomial::zero();
    let mut first = true;
    loop {
        let negative = match p.peek() {
            Some(Token::Plus) => {
                p.pos += 1;
                false
            }
            Some(Token::Minus) => {
                p.pos += 1;
                true
            }
            Some(_) if first => false,
            Some(_) => return Err(syntax(p.offset(), "expected '+' or '-' between terms")),
            None => break,
        };
        first = false;
        let (c, alpha) = p.term()?;
        out.add_term(alpha, if negative { -c } else { c });
    }
    Ok(out)
}

pub(super) fn write_polynomial(p: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, (alpha, c)) in p.terms().rev().enumerate() {
        let magnitude = c.abs();
        match (i, c.is_negative()) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if alpha.is_one() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            write!(f, "{alpha}")?;
        } else {
            write!(f, "{magnitude} {alpha}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn direct_reading() {
        let f = parse("x1^2 - 4").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&MultiIndex::from_exponents(&[2])), int(1));
        assert_eq!(f.coeff(&MultiIndex::one()), int(-4));
    }

    #[test]
    fn like_terms_collect() {
        let f = parse("3/2 x1 x2 + 3/2 x2 x1").unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.coeff(&MultiIndex::from_exponents(&[1, 1])), int(3));
    }

    #[test]
    fn cancellation() {
        let f = parse("x1^2 - x1^2").unwrap();
        assert!(f.is_zero());
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn serialization_format() {
        let f = parse("3 + x1^2/4").err();
        assert!(f.is_some(), "division after a factor is not in the grammar");
        let g = parse("3 + 1/4 x1^2").unwrap();
        assert_eq!(g.to_string(), "1/4 x1^2 + 3");
        assert_eq!(parse("-x2 + x1 x2 - 1").unwrap().to_string(), "x1 x2 - x2 - 1");
        assert_eq!(parse("− 2/6 x1^3").unwrap().to_string(), "-1/3 x1^3");
        assert_eq!(parse("x1x1x2").unwrap().to_string(), "x1^2 x2");
        assert_eq!(parse("0").unwrap().to_string(), "0");
        assert_eq!(parse("  x10 ^ 3 ").unwrap().coeff(&MultiIndex::from_pairs([(10, 3)]).unwrap()), ratio(1, 1));
    }

    #[test]
    fn errors_carry_positions() {
        let e = |s: &str| match parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(e("x0"), 1);
        assert_eq!(e("x1^0"), 3);
        assert_eq!(e("x1 + "), 5);
        assert_eq!(e("2 3"), 2);
        assert_eq!(e("1/0 x1"), 2);
        assert_eq!(e("x1 * x2"), 3);
        assert_eq!(e(""), 0);
        assert_eq!(e("x"), 0);
    }
}
