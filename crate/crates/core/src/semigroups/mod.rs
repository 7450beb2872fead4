// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

//! Operators on polynomials and the identities relating them.
//!
//! * `Δ = Σ ∂²/∂x_k²` ([`laplacian`]) and `D = Σ x_k ∂/∂x_k` ([`euler_d`]).
//! * The heat semigroup `e^{tΔ/2}` ([`heat`]), a terminating series on
//!   polynomials for every rational `t`, including negative `t`.
//! * Hermite polynomials `h_{α,s} = e^{−sΔ/2} x^α` and expansions in them.
//! * The dilation `f ↦ f(λ ·)` and the number operator `N_s = D − sΔ`.
//! * The Hermite semigroup `e^{−τN_s}`, which scales the coefficient of
//!   `h_{α,s}` by `λ^{|α|}` with `λ = e^{−τ}`.
//!
//! The central identity is `dilate(heat(f, t), λ) = e^{−τN_s} f` with
//! `λ² = (s − t)/s`; [`verify_ident2`] checks it in exact arithmetic.

mod convolution;
mod hermite;
mod ops;
mod params;
mod surd;
mod verify;

pub use convolution::{heat_convolution_oracle, ConvolutionCheck};
pub use hermite::{
    hermite, hermite_expand, hermite_semigroup, hermite_semigroup_surd, l2_contraction_ratio, HermiteExpansion,
};
pub use ops::{dilate, dilate_surd, euler_d, heat, laplacian, number_op};
pub use params::{Scale, VarianceParams};
pub use surd::SurdPolynomial;
pub use verify::{
    verify_commutator, verify_eigen_relation, verify_ident2, verify_intertwining, verify_nested_commutator,
    IdentityCheck,
};
