use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{forward_field_ops, rational_kth_root, KthRoot, Rational};
use crate::{Error, Result};

/// An element `re + im*i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: impl Into<Rational>, im: impl Into<Rational>) -> Self {
        GaussianRational { re: re.into(), im: im.into() }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn zero() -> Self {
        GaussianRational::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// True when both parts are integers.
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        let inv = n.recip()?;
        Some(GaussianRational { re: &self.re * &inv, im: -(&self.im * &inv) })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.recip().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    pub(crate) fn neg_ref(&self) -> Self {
        GaussianRational { re: -&self.re, im: -&self.im }
    }

    /// Multiply by `i^n`.
    fn rotate(&self, n: u32) -> Self {
        match n % 4 {
            0 => self.clone(),
            1 => GaussianRational { re: -&self.im, im: self.re.clone() },
            2 => self.neg_ref(),
            _ => GaussianRational { re: self.im.clone(), im: -&self.re },
        }
    }

    /// Exact square root, if one exists in `Q(i)`.
    ///
    /// `(x + yi)^2 = a + bi` forces `x^2 = (|z| + a)/2` and
    /// `y^2 = (|z| - a)/2` with `|z| = sqrt(a^2 + b^2)`, so the root exists
    /// exactly when all three of those are rational squares.
    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let modulus = rational_kth_root(&self.norm(), 2)?;
        let two = Rational::from(2);
        let x = rational_kth_root(&((&modulus + &self.re) / &two), 2)?;
        let mut y = rational_kth_root(&((&modulus - &self.re) / &two), 2)?;
        if self.im.is_negative() {
            y = -y;
        }
        let w = GaussianRational { re: x, im: y };
        debug_assert_eq!(w.pow(2), *self);
        Some(w)
    }

    /// Odd-degree root via a floating polar seed: `D * w` must be a Gaussian
    /// integer when `D` clears both denominators of `z = w^k`, so round the
    /// seed scaled by `D` and verify exactly.
    fn odd_root(&self, k: u32) -> Option<Self> {
        let re = self.re.to_f64()?;
        let im = self.im.to_f64()?;
        let denom: BigInt = self.re.denom().lcm(self.im.denom());
        let scale = Rational::from_integer(denom.clone()).to_f64()?;
        let radius = libm::pow(libm::hypot(re, im), 1.0 / k as f64);
        let angle = libm::atan2(im, re);
        for j in 0..k {
            let theta = (angle + 2.0 * core::f64::consts::PI * j as f64) / k as f64;
            let wr = libm::round(radius * libm::cos(theta) * scale);
            let wi = libm::round(radius * libm::sin(theta) * scale);
            if !(wr.is_finite() && wi.is_finite()) {
                return None;
            }
            let d = Rational::from_integer(denom.clone());
            let candidate = GaussianRational {
                re: Rational::from_integer(BigInt::from(wr as i128)) / &d,
                im: Rational::from_integer(BigInt::from(wi as i128)) / &d,
            };
            if candidate.pow(k) == *self {
                return Some(candidate);
            }
        }
        None
    }

    fn any_root(&self, k: u32) -> Option<Self> {
        if k == 1 {
            return Some(self.clone());
        }
        if k.is_multiple_of(2) {
            let v = self.exact_sqrt()?;
            // w^(k/2) is one of the two square roots.
            return v.any_root(k / 2).or_else(|| v.neg_ref().any_root(k / 2));
        }
        self.odd_root(k)
    }

    /// Picks, among `w * zeta` for the units `zeta` with `zeta^k = 1`, the one
    /// with largest real part, ties broken toward a nonnegative imaginary part.
    fn canonical_root(w: Self, k: u32) -> Self {
        let rotations: Vec<u32> = match k % 4 {
            0 => alloc::vec![0, 1, 2, 3],
            2 => alloc::vec![0, 2],
            _ => alloc::vec![0],
        };
        rotations
            .into_iter()
            .map(|n| w.rotate(n))
            .max_by(|a, b| a.re.cmp(&b.re).then_with(|| (!a.im.is_negative()).cmp(&!b.im.is_negative())).then_with(|| a.im.cmp(&b.im)))
            .expect("at least the identity rotation")
    }
}

impl KthRoot for GaussianRational {
    fn kth_root(&self, k: u32) -> Option<Self> {
        assert!(k >= 1, "root degree must be at least 1");
        let w = self.any_root(k)?;
        Some(GaussianRational::canonical_root(w, k))
    }
}

forward_field_ops!(GaussianRational);

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::from_rational(re)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let im_text = if im_abs.is_one() { alloc::string::String::new() } else { alloc::format!("{im_abs}") };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_text}i");
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{im_text}i", self.re)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts the [`fmt::Display`] forms: `a`, `bi`, `a+bi`, `a-bi`, with
    /// `a`, `b` integers or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from_rational(s.parse()?));
        };
        let split = body.char_indices().skip(1).filter(|(_, ch)| *ch == '+' || *ch == '-').last().map(|(i, _)| i);
        let (re, im) = match split {
            Some(i) => (body[..i].parse()?, &body[i..]),
            None => (Rational::zero(), body),
        };
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            text => text.parse().map_err(|_| Error::Parse(s.into()))?,
        };
        Ok(GaussianRational { re, im })
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
