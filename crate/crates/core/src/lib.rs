//! Exact verification engine for the super Catalan numbers
//! `S(m,n) = (2m)!(2n)! / (m! n! (m+n)!)`.
//!
//! Every value is computed exactly. The arithmetic routines are generic over
//! an integer scalar (see [`Scalar`] and [`SignedScalar`]); the aliases
//! [`Nat`], [`Int`] and [`Rat`] name the arbitrary-precision instantiations
//! used throughout the command-line tool. Fixed-width scalars such as `u64`
//! or `i128` also work and report [`Error::Overflow`] instead of wrapping.

pub mod cube_spectrum;
mod error;
pub mod exact;
pub mod involution_search;
pub mod krawtchouk;
pub mod lattice_paths;
mod limits;
pub mod matching;
pub mod super_catalan;

pub(crate) mod bits;

pub use error::{Error, Result};
pub use exact::{Scalar, SignedScalar};
pub use limits::Limits;
pub use super_catalan::ScnIndex;

/// Arbitrary-precision natural number.
pub type Nat = num_bigint::BigUint;
/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Exact rational in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;
