//! The exact-field abstraction shared by `Q`, `Q(i)` and `Q(u)`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, GaussianRational, RatFunc, Rational, Result};

/// Exact field arithmetic with decidable equality.
///
/// The elliptic-curve group law, the triple constructions and the parametric
/// families are written once against this trait, then run over rationals,
/// Gaussian rationals or rational functions.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
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
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;

    fn from_rational(q: &Rational) -> Self;

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from(n)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn pow(&self, exp: u32) -> Self {
        Rational::pow(self, exp)
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        GaussianRational::new(n, 0)
    }
    fn from_rational(q: &Rational) -> Self {
        GaussianRational::from_rational(q.clone())
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(Rational::from(n))
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }
    fn pow(&self, exp: u32) -> Self {
        RatFunc::pow(self, exp)
    }
}
