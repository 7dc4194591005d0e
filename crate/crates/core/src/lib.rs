//! Exact Padovan numbers at any integer index.
//!
//! The sequence follows `P(n+3) = P(n+1) + P(n)` with `P(0) = P(1) = P(2) = 1`
//! and is extended to negative indices by running the recurrence backwards.
//! On top of the plain sequence the crate provides:
//!
//! * the a-step decimation recurrence `P(n) = rho(a) P(n-a) + sigma(a) P(n-2a) + P(n-3a)`
//!   and its coefficients ([`decimation`]),
//! * reduction certificates that express `P(n)` over the three head entries of
//!   a column of the a-columns table ([`decimation::reduce_to_head`]),
//! * several evaluation strategies that must agree exactly ([`decimation::EvalStrategy`]),
//! * a-columns tables and column partial sums ([`tables`]),
//! * the folded sequences `Q(n) = P(n) + P(-n)` and `R(n) = P(n) - P(-n)` ([`folded`]),
//! * an executable identity catalogue ([`verify`]) and a timing harness ([`bench`]).
//!
//! All arithmetic is generic over a [`Term`] scalar. [`Integer`] (an
//! arbitrary-precision signed integer) is the type used throughout the
//! catalogue and the CLI; [`Rational`] is handy for Padovan-type sequences
//! with fractional initials. Machine integers also implement [`Term`] and are
//! fine for small indices.

pub mod bench;
pub mod decimation;
pub mod error;
pub mod folded;
pub mod scalar;
pub mod sequence;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Term;
pub use sequence::{IndexCap, PadovanType, SequenceWindow};

/// Arbitrary-precision signed integer; the value type of every term and coefficient.
pub type Integer = num_bigint::BigInt;

/// Exact rational built on [`Integer`].
pub type Rational = num_rational::BigRational;

/// `P(n)` under the default index cap.
pub fn pad(n: i64) -> Result<Integer> {
    sequence::pad(n, IndexCap::default())
}

/// `rho(a)` under the default index cap.
pub fn rho(a: i64) -> Result<Integer> {
    decimation::rho(a, IndexCap::default())
}

/// `sigma(a)` under the default index cap.
pub fn sigma(a: i64) -> Result<Integer> {
    decimation::sigma(a, IndexCap::default())
}
