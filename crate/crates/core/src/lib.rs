//! Exact arithmetic and constructions for higher-power rational Diophantine
//! triples.
//!
//! A set `{a_1, .., a_m}` of distinct nonzero rationals is a `k`-th power
//! Diophantine tuple when every `a_i a_j + 1` is the `k`-th power of a
//! rational. This crate builds and verifies such tuples, with a focus on
//! *regular* quartic triples `a = s^2 - r^2, b = t^2 - r^2, c = s^2 + t^2`
//! arising from rational points on
//!
//! ```text
//! (s^2 r^2 - 1) / (s^2 - r^2) = t^2
//! ```
//!
//! Everything is exact: [`Rational`], [`GaussianRational`] and the
//! rational-function field [`RatFunc`] all implement [`Field`], and a single
//! elliptic-curve group law ([`curve`]) runs over any of them. Parametric
//! identities are therefore proved by computing in `Q(u)` rather than by
//! sampling.
//!
//! The crate is `no_std` and only needs `alloc`. Searches, file formats and
//! the command-line front end live in the `powtrip` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod arith;
pub mod curve;
mod error;
pub mod family;
pub mod field;
pub mod gaussian_scan;
pub mod octic;
pub mod pell;
pub mod poly;
pub mod report;
pub mod triple;

pub use arith::{int_kth_root, GaussianRational, KthRoot, Rational};
pub use error::{Error, Result};
pub use field::Field;
pub use poly::{Poly, RatFunc};
