//! Exact-arithmetic toolkit for linear determinantal representations of
//! smooth plane cubics.
//!
//! A ternary cubic form `F(X, Y, Z)` over a field `k` admits a linear
//! determinantal representation if `F = lambda * det(X*M0 + Y*M1 + Z*M2)`
//! for constant 3x3 matrices `M0, M1, M2` and a nonzero scalar `lambda`.
//! This crate constructs, verifies, classifies and counts such
//! representations over small finite fields `GF(p^m)` and, for
//! verification purposes, over the rationals.
//!
//! The crate is `no_std` (with `alloc`); all arithmetic is exact.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod census;
pub mod curve;
pub mod detrep;
pub mod equiv;
pub mod error;
pub mod field;
pub mod forms;
pub mod linsys;

pub use error::Error;
pub use field::{Embedding, FieldCtx, FieldElement};
pub use forms::{LinearMatrix, ProjectiveTransform, TernaryForm};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
