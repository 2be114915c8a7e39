//! Linear-optimization degrees of affine varieties.
//!
//! Computes the bidegrees of the affine conormal variety of `X ⊂ C^n`
//! (the LO bidegrees), the LO degrees of generic affine sections, the polar
//! degrees of the projective closure, and the Chern-Mather coefficients
//! obtained from the bidegrees by a binomial transform. Every count is a
//! point count of a zero-dimensional ideal over a large prime field, repeated
//! across seeds and primes until all trials agree.
//!
//! The crate is `no_std` (it needs `alloc`); time budgets take a caller
//! supplied [`budget::Clock`].

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod budget;
pub mod error;
pub mod field;
pub mod genericity;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod variety;

pub use error::{Error, Result};
