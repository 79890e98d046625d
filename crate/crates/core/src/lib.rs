//! Exact computations around the open XXZ chain at Δ = −1/2 and totally
//! symmetric alternating sign matrices.
//!
//! Everything is exact: scalars live in ℚ or ℚ(i), symbolic results are
//! [`MultiLaurent`] polynomials with big-integer coefficients. The numeric code
//! is generic over [`Field`], and the aliases below fix the common choices.

pub mod arith;
pub mod error;
pub mod contour;
pub mod qkz;
pub mod report;
pub mod shape;
pub mod sixvertex;
pub mod spin;
pub mod spinchain;
pub mod theorems;
pub mod tsasm;
pub(crate) mod verify;

pub use arith::{brace, bracket, Field, GaussianRational, MultiLaurent, Ring, Sampler};
pub use error::{Error, Result};
pub use report::Report;
pub use shape::ChainShape;

/// Rational numbers.
pub type Rational = num_rational::BigRational;
/// Big integers.
pub type Integer = num_bigint::BigInt;
/// Integer Laurent polynomials, the type of ψ components, S_N and A_TS.
pub type IntPoly = MultiLaurent<Integer>;
/// Gaussian rationals, the default evaluation field.
pub type Gq = GaussianRational;
