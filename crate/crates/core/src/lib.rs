//! Exact machinery for the homogeneous binary Markov model on rooted trees.
//!
//! Every node of a rooted tree carries an observed 0/1 state and every edge
//! the same 2x2 transition matrix `(a_00, a_01, a_10, a_11)`. The probability
//! of a full labeling is the product of one `a_xy` per edge, so each labeling
//! is described by its four edge-transition counts. This crate builds that
//! monomial parameterization and everything downstream of it, with integer or
//! rational arithmetic throughout (no floating point in any decision):
//!
//! - [`tree`]: rooted-tree values, parsing, and canonical enumeration of
//!   rooted and binary trees by node count;
//! - [`config`]: labelings, transition-count vectors, the 4 x 2^n
//!   configuration matrix, and a subtree dynamic program that finds the
//!   achievable transition vectors without touching all 2^n labelings;
//! - [`polytope`]: the exact 3-dimensional lattice polytope spanned by the
//!   transition vectors (convex hull, f-vector, normalized volume, the
//!   universal polytope of completely odd binary trees, census statistics);
//! - [`toric`]: the binomial ideal of algebraic relations among labeling
//!   probabilities (integer kernel, Markov bases by saturation, minimal
//!   generators, Groebner bases, conjecture reports);
//! - [`viterbi`]: max-sum decoding in exact rational log-coordinates and its
//!   link to the normal fan of the polytope.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `phylotoric` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod config;
pub mod error;
pub mod polytope;
pub mod toric;
pub mod tree;
pub mod viterbi;

pub use config::{achievable_points, transition_vector, Configuration, Labeling, TransitionVector};
pub use error::{Error, Result};
pub use polytope::{hull, LatticePolytope};
pub use tree::Tree;

/// Version stamp embedded in cached results; bumping the crate version
/// invalidates caches that key on it.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
