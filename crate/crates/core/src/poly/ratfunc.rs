use alloc::vec::Vec;
use core::fmt;

use super::Poly;
use crate::arith::forward_field_ops;
use crate::{Error, KthRoot, Rational, Result};

/// An element of `Q(u)` in canonical form: numerator and denominator
/// coprime, denominator monic. Canonical form makes `==` decide equality of
/// rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        };
        Ok(RatFunc::normalized(num, den))
    }

    /// Makes the denominator monic; assumes `num` and `den` are coprime.
    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.recip().expect("nonzero leading coefficient");
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    /// The indeterminate `u`.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Constant value, if this is a constant function.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// Value at `at`, `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        self.num.eval(at).checked_div(&d).ok()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        // coprime parts stay coprime under powers
        RatFunc::normalized(self.num.pow(exp), self.den.pow(exp))
    }

    pub fn powi(&self, exp: i32) -> Option<Self> {
        let p = self.pow(exp.unsigned_abs());
        if exp < 0 {
            p.recip()
        } else {
            Some(p)
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.recip().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: with g = gcd(b, d), only gcd(t, g) can cancel.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &self.num * &rhs.den + &rhs.num * &self.den;
            return RatFunc::normalized(num, &self.den * &rhs.den);
        }
        let b1 = exact(&self.den, &g);
        let d1 = exact(&rhs.den, &g);
        let t = &self.num * &d1 + &rhs.num * &b1;
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = t.gcd(&g);
        let (num, d_rest) = if g2.is_one() { (t, rhs.den.clone()) } else { (exact(&t, &g2), exact(&rhs.den, &g2)) };
        RatFunc::normalized(num, &b1 * &d_rest)
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &exact(&self.num, &g1) * &exact(&rhs.num, &g2);
        let den = &exact(&self.den, &g2) * &exact(&rhs.den, &g1);
        RatFunc::normalized(num, den)
    }

    pub(crate) fn neg_ref(&self) -> Self {
        RatFunc { num: self.num.neg_ref(), den: self.den.clone() }
    }

    /// Composition `self(arg)`; fails when `arg` lands on a pole.
    pub fn compose(&self, arg: &RatFunc) -> Result<RatFunc> {
        let n_deg = self.num.degree().unwrap_or(0);
        let d_deg = self.den.degree().unwrap_or(0);
        let num = homogeneous_eval(&self.num, n_deg, arg);
        let den = homogeneous_eval(&self.den, d_deg, arg);
        // self(A/B) = num(A,B) B^d_deg / (den(A,B) B^n_deg)
        let (num, den) = if n_deg >= d_deg {
            (num, &den * &arg.den.pow((n_deg - d_deg) as u32))
        } else {
            (&num * &arg.den.pow((d_deg - n_deg) as u32), den)
        };
        RatFunc::new(num, den)
    }

    /// Exact `k`-th root; for even `k` the numerator's leading coefficient is
    /// taken positive.
    pub fn kth_root(&self, k: u32) -> Option<RatFunc> {
        let num = self.num.kth_root(k)?;
        let den = self.den.kth_root(k)?;
        Some(RatFunc::normalized(num, den))
    }

    pub fn sqrt(&self) -> Option<RatFunc> {
        self.kth_root(2)
    }

    pub fn to_string_in(&self, var: &str) -> alloc::string::String {
        if self.den.is_one() {
            self.num.to_string_in(var)
        } else {
            alloc::format!("({})/({})", self.num.display(var), self.den.display(var))
        }
    }
}

fn exact(p: &Poly, d: &Poly) -> Poly {
    if d.is_one() {
        return p.clone();
    }
    let (q, r) = p.div_rem(d).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

/// `sum c_i A^i B^(degree - i)` for `arg = A/B`.
fn homogeneous_eval(p: &Poly, degree: usize, arg: &RatFunc) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let a_pows: Vec<Poly> = core::iter::successors(Some(Poly::one()), |x| Some(x * &arg.num)).take(degree + 1).collect();
    let b_pows: Vec<Poly> = core::iter::successors(Some(Poly::one()), |x| Some(x * &arg.den)).take(degree + 1).collect();
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly::zero(), |acc, (i, c)| acc + (&a_pows[i] * &b_pows[degree - i]).scale(c))
}

/// Substitutes a rational function for the variable of `p`.
pub fn substitute(p: &Poly, arg: &RatFunc) -> RatFunc {
    RatFunc::from_poly(p.clone()).compose(arg).expect("a polynomial has no poles")
}

impl KthRoot for RatFunc {
    fn kth_root(&self, k: u32) -> Option<Self> {
        RatFunc::kth_root(self, k)
    }
}

forward_field_ops!(RatFunc);

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("u"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
