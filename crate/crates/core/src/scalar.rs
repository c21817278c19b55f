//! Exact coefficient fields.
//!
//! Everything in this crate is generic over an exact field of characteristic
//! zero. Floating point types are deliberately not admitted: canonical normal
//! forms and exact zero tests are the whole point.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, One, Signed, Zero};

/// An exact field of characteristic zero.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + Signed
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every i64 embeds in the scalar field")
    }

    /// Parses the textual form produced by `Display` (`"3"`, `"-7/2"`).
    fn parse_literal(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }

    /// True when the value is an integer (denominator one).
    fn is_integral(&self) -> bool;
}

impl Scalar for BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for Rational64 {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Binomial coefficient as an exact scalar.
pub fn binomial<S: Scalar>(n: u32, k: u32) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    S::from_str(&acc.to_string())
        .ok()
        .expect("integer literal parses in any exact field")
}

pub fn factorial<S: Scalar>(n: u32) -> S {
    let mut acc = S::one();
    for i in 2..=n {
        acc = acc * S::from_int(i as i64);
    }
    acc
}
