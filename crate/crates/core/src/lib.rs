//! Exact matching polynomials, Hosoya indices and energies of trees, and the
//! caterpillar `S(D)` that minimises all three among caterpillars with a given
//! degree sequence.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values, so all types are `Send + Sync`. File
//! formats, the command line and the parallel verification sweeps live in the
//! `catermin` companion crate.
//!
//! Conventions:
//!
//! * A [`Caterpillar`] is stored by the *total* degree of each spine vertex,
//!   left to right. `C(4, 2, 3)` has three spine vertices carrying 3, 0 and 2
//!   leaves.
//! * Polynomials are stored lowest degree first with arbitrary-precision
//!   coefficients; `M(G, x) = Σ m(G, k) x^k`.
//! * Rational inputs (`x` samples, `τ` values) use [`Rational`], an exact
//!   big-integer fraction.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod energy;
pub mod enumerate;
mod error;
pub mod extremal;
pub mod graph;
pub mod majorization;
pub mod matching;
pub mod poly;
pub mod roots;
pub mod transfer;
pub mod verify;

pub use error::Error;
pub use graph::{Caterpillar, DegreeSequence, ReducedDegreeSequence, RootedBranch, Tree};
pub use poly::MatchingPolynomial;

/// Exact rational number with big-integer numerator and denominator.
pub type Rational = num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
