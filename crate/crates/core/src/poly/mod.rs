// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Variables are `x1, x2, x3, ...` with no upper bound on the index. Every
//! polynomial depends on finitely many of them, which is how the
//! infinite-dimensional setting is realised.

mod eval;
mod multi_index;
mod polynomial;
mod text;

pub use eval::HornerEvaluator;
pub use multi_index::MultiIndex;
pub use polynomial::Polynomial;
pub use text::parse;
