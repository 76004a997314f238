//! Extended nonnegative rationals `Q>=0 ∪ {+inf}`.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedValue {
    Finite(BigRational),
    Infinite,
}

impl ExtendedValue {
    pub fn zero() -> Self {
        ExtendedValue::Finite(BigRational::zero())
    }

    pub fn one() -> Self {
        ExtendedValue::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ExtendedValue::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExtendedValue::Finite(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Wraps a rational, rejecting negative values.
    pub fn nonnegative(r: BigRational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::InvariantViolation(format!(
                "negative rank value {}",
                fraction_string(&r)
            )));
        }
        Ok(ExtendedValue::Finite(r))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedValue::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtendedValue::Finite(r) => Some(r),
            ExtendedValue::Infinite => None,
        }
    }

    pub fn expect_finite(&self) -> Result<&BigRational> {
        self.finite().ok_or(Error::InfiniteArithmetic)
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => ExtendedValue::Finite(a + b),
            _ => ExtendedValue::Infinite,
        }
    }

    /// `self - other`; `inf - x` is `inf` for finite `x`, `inf - inf` is an error.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => Self::nonnegative(a - b),
            (ExtendedValue::Infinite, ExtendedValue::Finite(_)) => Ok(ExtendedValue::Infinite),
            (_, ExtendedValue::Infinite) => Err(Error::InfiniteArithmetic),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        match self {
            ExtendedValue::Finite(a) => ExtendedValue::Finite(a * factor),
            ExtendedValue::Infinite if factor.is_zero() => ExtendedValue::zero(),
            ExtendedValue::Infinite => ExtendedValue::Infinite,
        }
    }
}

impl From<BigRational> for ExtendedValue {
    fn from(r: BigRational) -> Self {
        ExtendedValue::Finite(r)
    }
}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedValue::Finite(a), ExtendedValue::Finite(b)) => a.cmp(b),
            (ExtendedValue::Finite(_), ExtendedValue::Infinite) => Ordering::Less,
            (ExtendedValue::Infinite, ExtendedValue::Finite(_)) => Ordering::Greater,
            (ExtendedValue::Infinite, ExtendedValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(r) => f.write_str(&fraction_string(r)),
            ExtendedValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Exact `p/q` text with the denominator always present (`"1/1"`, `"0/1"`).
pub fn fraction_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
