//! Exact coefficient rings.
//!
//! Every algorithm in this crate is generic over [`Ring`]: symbolic work runs
//! over [`ParamPoly`](crate::param::ParamPoly) (the integer polynomial ring in
//! the parameters), numeric work over [`BigRational`]. Division is only ever
//! requested where it is known to be exact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic and a partial exact division.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_bigint(v: &BigInt) -> Self;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `self / other` when the quotient exists in the ring, `None` otherwise.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    /// Prefer division-free minor expansion over fraction-free elimination
    /// for small structured determinants. Worth it when exact division is
    /// much dearer than multiplication by a small entry.
    const EXPAND_MINORS: bool = false;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self * a - b * c`, the shape of every elimination update.
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Self {
        self.mul(a).sub(&b.mul(c))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign_of(v: &BigRational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
