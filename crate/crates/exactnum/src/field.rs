use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{ExactError, FieldScalar, Rational, Result};

/// Commutative field operations shared by every coefficient type in the crate.
///
/// `f64` implements this too so numeric evaluation can reuse the generic
/// matrix code; for floats `is_zero` means exactly `0.0`.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    fn from_i64(n: i64) -> Self;

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.inv()?)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Types that contain Q(√2,√3): exact scalars, rational functions, floats.
pub trait FromScalar: Field {
    fn from_scalar(x: &FieldScalar) -> Self;
}

/// Integer power; negative exponents invert.
pub fn pow_i<T: Field>(x: &T, n: i64) -> Result<T> {
    let base = if n < 0 { x.inv()? } else { x.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = T::one();
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = sq.clone() * &sq;
        }
    }
    Ok(acc)
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(ExactError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn from_i64(n: i64) -> Self {
        crate::rational::from_i64(n)
    }
}

impl Field for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn inv(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(ExactError::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl FromScalar for f64 {
    fn from_scalar(x: &FieldScalar) -> Self {
        x.to_f64()
    }
}
