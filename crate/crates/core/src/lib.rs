// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact symbolic-numeric calculus for polynomials in infinitely many
//! variables under Gaussian measures.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials with arbitrary-precision
//!   rational coefficients and a small text format.
//! * [`gaussian`]: moments, inner products and `L^p` norms against the
//!   product Gaussian measure `μ_s` (coordinate variance `s`).
//! * [`semigroups`]: the Laplacian, the Euler operator, the heat semigroup,
//!   Hermite polynomials, dilations, the number operator and exact checks of
//!   the identities that tie them together.
//! * [`matrixrep`]: dense matrix representations on the graded space of
//!   polynomials of bounded degree, exact and floating matrix exponentials
//!   and the Baker–Campbell–Hausdorff factorisation check.
//! * [`random`]: seedable generators of test polynomials.

pub mod error;
pub mod gaussian;
pub mod matrixrep;
pub mod poly;
pub mod random;
pub mod rational;
pub mod semigroups;

pub use error::{Error, Result};
pub use poly::{MultiIndex, Polynomial};
pub use rational::Rational;
