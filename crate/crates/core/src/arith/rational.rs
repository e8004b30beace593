use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::forward_field_ops;
use crate::{Error, Result};

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
///
/// Prints and parses as `"num/den"`, with the denominator omitted when it is
/// one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

/// Sign of an exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn sign(&self) -> Sign {
        if self.0.is_zero() {
            Sign::Zero
        } else if self.0.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Integer power; negative exponents invert, so `0^-n` is `None`.
    pub fn powi(&self, exp: i32) -> Option<Self> {
        let p = self.pow(exp.unsigned_abs());
        if exp < 0 {
            p.recip()
        } else {
            Some(p)
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    pub(crate) fn neg_ref(&self) -> Self {
        Rational(-&self.0)
    }

    /// Decimal expansion truncated toward zero after `places` digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10u32), places);
        let scaled = (self.numer().abs() * &scale) / self.denom();
        let (int_part, frac_part) = scaled.div_rem(&scale);
        let mut out = String::new();
        if self.is_negative() && !scaled.is_zero() {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if places > 0 {
            out.push('.');
            let digits = frac_part.to_string();
            for _ in digits.len()..places {
                out.push('0');
            }
            out.push_str(&digits);
        }
        out
    }

    /// Nearest `f64`; only used internally to seed root finding.
    pub(crate) fn to_f64(&self) -> Option<f64> {
        let v = self.0.to_f64()?;
        v.is_finite().then_some(v)
    }
}

forward_field_ops!(Rational);

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let parse_int = |part: &str| -> Result<BigInt> {
            let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            part.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Rational::new(parse_int(n)?, d)
            }
        }
    }
}
