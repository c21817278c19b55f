//! Exact symbolic algebra for a graded field `F = K[t, t^-1]` carrying two
//! minimal A-infinity structures: the strict one and a deformation whose
//! `m_{n+2}` is the Hochschild class `eta ⊗ d/dt`.
//!
//! All math is generic over an exact [`Scalar`] field; the aliases at the
//! crate root fix the scalars to arbitrary-precision rationals.

pub mod ainf;
pub mod error;
pub mod linalg;
pub mod polydiff;
pub mod random;
pub mod scalar;
pub mod small_hh;
pub mod tower;
pub mod twisted;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rationals, the default ground field.
pub type Q = num_rational::BigRational;

pub type MPoly = tower::MPoly<Q>;
pub type RatFunc = tower::RatFunc<Q>;
pub type FElem = tower::FElem<Q>;
pub type PolyDiffCochain = polydiff::PolyDiffCochain<Q>;
pub type PolyVector = polydiff::PolyVector<Q>;
