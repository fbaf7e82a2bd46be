//! Exact rational machinery for assigning Ramanujan smoothed sums to
//! divergent power sums and figurate binomial series.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is computed over
//! arbitrary-precision rationals, so results are exact and comparisons
//! carry no tolerance.
//!
//! Layout:
//!
//! - [`rational`], [`poly`], [`series`], [`toeplitz`]: scalars, dense
//!   polynomials, truncated Laurent series with tracked truncation order,
//!   and triangular Toeplitz inversion.
//! - [`numbers`]: Bernoulli numbers, generalized Bernoulli polynomials,
//!   Eulerian polynomials, Gregory coefficients and polynomials, extended
//!   Gregory coefficients, Hirzebruch numbers, and a memo cache.
//! - [`genfunc`], [`parse`]: rational generating functions with poles only
//!   at `x = ±1`, their expression grammar, twisting, and the
//!   difference decompositions used by the intuitive method.
//! - [`ramanujan`]: gauge expansions and the smoothed-sum engines.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod genfunc;
pub mod numbers;
pub mod parse;
pub mod poly;
pub mod ramanujan;
pub mod rational;
pub mod series;
pub mod toeplitz;

pub use error::{Error, Result};
pub use genfunc::{Decomposition, RationalGF};
pub use numbers::{Fault, GregoryPolynomial, NumberCache};
pub use poly::Polynomial;
pub use ramanujan::{AsymptoticExpansion, Method, SeriesFamily, SmoothedSum};
pub use rational::Rational;
pub use series::TruncatedLaurentSeries;
