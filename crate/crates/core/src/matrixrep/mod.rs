// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Matrices of `Δ`, `D` and `N_s` on the space of polynomials of degree at
//! most `n` in `x1..xm`, which all three operators leave invariant.
//!
//! Columns are images of basis monomials, and the basis is ordered by
//! increasing degree. `D` is therefore diagonal, `Δ` (which lowers degree by
//! two) is strictly upper triangular, and `N_s` is upper triangular with
//! diagonal `|α|`.

mod basis;
mod bch;
mod matrix;

pub use basis::{GradedBasis, MAX_DIMENSION};
pub use bch::{bch_check, BchReport};
pub use matrix::{expm_float, operator_matrix, Operator, OperatorMatrix};
