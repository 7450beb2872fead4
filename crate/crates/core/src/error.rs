// Copyright 2026 The gausscalc Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed polynomial or rational text. `position` is a character offset.
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("tensor grid of {requested} nodes exceeds the cap of {cap} nodes")]
    NodeCap { requested: u128, cap: u64 },

    #[error("graded basis of dimension {dim} exceeds the cap of {cap}")]
    BasisTooLarge { dim: u128, cap: usize },

    #[error("matrix is not nilpotent; the exact exponential needs a nilpotent input")]
    NotNilpotent,

    #[error("monomial {0} lies outside the graded basis")]
    OutsideBasis(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
