//! Dense univariate polynomials over `Q` and the rational-function field
//! `Q(u)`.
//!
//! Every parametric identity in the crate is checked by exact arithmetic in
//! these types. Degrees stay small (a few hundred at most), so a dense
//! coefficient vector is enough.

mod intpoly;
mod ratfunc;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

pub use ratfunc::{substitute, RatFunc};

use crate::arith::forward_field_ops;
use crate::{Error, KthRoot, Rational, Result};

/// A polynomial with rational coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if self.is_constant() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_constant() {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, da) = intpoly::to_integer(self);
        let (b, db) = intpoly::to_integer(rhs);
        intpoly::from_integer(intpoly::mul(&a, &b), &(da * db))
    }

    pub(crate) fn neg_ref(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Polynomial rings have no general division; `checked_div` is exact
    /// division and fails on a nonzero remainder.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(rhs)?;
        if !r.is_zero() {
            return Err(Error::Precondition(alloc::format!("{rhs} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        let mut base = self.clone();
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

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else { return Err(Error::DivisionByZero) };
        let lead_inv = divisor.coeffs[dd].recip().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&c * d);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let (a, _) = intpoly::to_integer(self);
        let (b, _) = intpoly::to_integer(other);
        intpoly::from_integer(intpoly::gcd(a, b), &BigInt::from(1)).monic()
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &Rational::from(i as i64)).collect())
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| acc.mul_ref(inner).add_ref(&Poly::constant(c.clone())))
    }

    /// `x^degree_hint * self(1/x)`: the coefficients reversed against a
    /// window of `degree_hint + 1` slots.
    pub fn reversal(&self, degree_hint: usize) -> Result<Poly> {
        if self.degree().is_some_and(|d| d > degree_hint) {
            return Err(Error::Precondition(alloc::format!("degree hint {degree_hint} below degree of {self}")));
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree_hint + 1, Rational::zero());
        coeffs.reverse();
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Writes a self-reciprocal `g(a)` as `a^half_span * h(a + 1/a)` and
    /// returns `h`, or `None` when `g(a) / a^half_span` is not a symmetric
    /// Laurent polynomial.
    pub fn symmetric_in_u(&self, half_span: usize) -> Option<Poly> {
        let span = 2 * half_span;
        if self.degree().is_some_and(|d| d > span) {
            return None;
        }
        // laurent[j] is the coefficient of a^(j - half_span)
        let mut laurent: Vec<Rational> = (0..=span).map(|i| self.coeff(i)).collect();
        if (0..=span).any(|i| laurent[i] != laurent[span - i]) {
            return None;
        }
        let mut h = vec![Rational::zero(); half_span + 1];
        for j in (1..=half_span).rev() {
            let d = laurent[half_span + j].clone();
            if d.is_zero() {
                continue;
            }
            // subtract d * (a + 1/a)^j = d * sum_m C(j, m) a^(j - 2m)
            let mut binom = Rational::one();
            for m in 0..=j {
                let idx = half_span + j - 2 * m;
                laurent[idx] = &laurent[idx] - &(&d * &binom);
                binom = binom * Rational::from((j - m) as i64) / Rational::from((m + 1) as i64);
            }
            h[j] = d;
        }
        h[0] = laurent[half_span].clone();
        Some(Poly::from_coeffs(h))
    }

    /// Exact `k`-th root, leading coefficient positive for even `k`.
    ///
    /// Coefficients are fixed from the top down: once the leading `j` terms
    /// of the root are known, the next coefficient is determined linearly by
    /// the residual's leading term. The candidate is verified at the end.
    pub fn kth_root(&self, k: u32) -> Option<Poly> {
        assert!(k >= 1, "root degree must be at least 1");
        let Some(deg) = self.degree() else { return Some(Poly::zero()) };
        let k_us = k as usize;
        if deg % k_us != 0 {
            return None;
        }
        let m = deg / k_us;
        let lead = self.coeffs[deg].kth_root(k)?;
        let denom = Rational::from(k as i64) * lead.pow(k - 1);
        let mut root = Poly::monomial(lead, m);
        for j in 1..=m {
            let residual = self.sub_ref(&root.pow(k));
            let c = residual.coeff(deg - j) / &denom;
            if !c.is_zero() {
                root = root.add_ref(&Poly::monomial(c, m - j));
            }
        }
        (root.pow(k) == *self).then_some(root)
    }

    pub fn sqrt(&self) -> Option<Poly> {
        self.kth_root(2)
    }

    /// Displays with the given variable name.
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }

    pub fn to_string_in(&self, var: &str) -> String {
        alloc::format!("{}", self.display(var))
    }
}

/// Square root of a polynomial, `None` when it is not a perfect square.
pub fn poly_square_root(p: &Poly) -> Option<Poly> {
    p.sqrt()
}

forward_field_ops!(Poly);

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
                if i > 0 {
                    f.write_str("*")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str(self.var)?,
                _ => write!(f, "{}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display("u"), f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
