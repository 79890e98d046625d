//! The two algebraic interfaces used throughout the crate.
//!
//! [`Ring`] covers coefficient rings (integers, rationals, Gaussian rationals and
//! Laurent polynomials over them). [`Field`] adds exact division and is what the
//! numeric evaluation code (residues, R-matrices, overlaps) is generic over.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse, if `self` is a unit.
    fn try_inv(&self) -> Option<Self>;

    /// `self += a * b`, overridden where borrowing avoids clones.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let acc = std::mem::replace(self, Self::zero());
        *self = acc + a.clone() * b.clone();
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// Integer power; negative exponents need a unit.
    fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.try_inv()
                .ok_or_else(|| domain(format!("{self} is not invertible")))?
        } else {
            self.clone()
        };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}

pub trait Field: Ring + Div<Output = Self> {
    /// `self / other`, with a domain error instead of a panic on zero.
    fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(domain("division by zero"));
        }
        Ok(self.clone() / other.clone())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

/// `[v] = v - 1/v`.
pub fn bracket<R: Ring>(v: &R) -> Result<R> {
    let inv = v
        .try_inv()
        .ok_or_else(|| domain(format!("bracket of non-invertible value {v}")))?;
    Ok(v.clone() - inv)
}

/// `{v} = v + 1/v`.
pub fn brace<R: Ring>(v: &R) -> Result<R> {
    let inv = v
        .try_inv()
        .ok_or_else(|| domain(format!("brace of non-invertible value {v}")))?;
    Ok(v.clone() + inv)
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn try_inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Field for BigRational {}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    #[test]
    fn bracket_and_brace_at_one() {
        assert!(bracket(&q(1, 1)).unwrap().is_zero());
        assert_eq!(brace(&q(1, 1)).unwrap(), q(2, 1));
    }

    #[test]
    fn bracket_rejects_zero() {
        assert!(bracket(&BigRational::zero()).is_err());
        assert!(brace(&BigRational::zero()).is_err());
    }

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).try_inv(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).try_inv(), None);
        assert!(bracket(&BigInt::from(2)).is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(q(2, 3).powi(3).unwrap(), q(8, 27));
        assert_eq!(q(2, 3).powi(-2).unwrap(), q(9, 4));
        assert_eq!(q(5, 1).powi(0).unwrap(), q(1, 1));
        assert!(BigRational::zero().powi(-1).is_err());
    }
}
