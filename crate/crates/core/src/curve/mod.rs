//! Elliptic curves in long Weierstrass form over any exact [`Field`].
//!
//! One group law serves `Q`, `Q(i)` and `Q(u)`; over `Q(u)` every result is
//! an identity of rational functions.

mod catalog;
mod maps;

pub use catalog::{CurveId, Scaling};
pub use maps::{er_to_alpha_s, CubicSection, FermatPoint};

use crate::{Error, Field, Result};

/// `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6` with nonzero
/// discriminant.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve<F> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
    pub a6: F,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Point<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: Field> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(y),
        }
    }
}

impl<F: Field> Curve<F> {
    pub fn new(a1: F, a2: F, a3: F, a4: F, a6: F) -> Result<Self> {
        let curve = Curve { a1, a2, a3, a4, a6 };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    /// `y^2 = x^3 + a2 x^2 + a4 x + a6`.
    pub fn from_cubic(a2: F, a4: F, a6: F) -> Result<Self> {
        Curve::new(F::zero(), a2, F::zero(), a4, a6)
    }

    pub fn discriminant(&self) -> F {
        let Curve { a1, a2, a3, a4, a6 } = self;
        let c = |n: i64| F::from_i64(n);
        let b2 = a1.square() + c(4) * a2;
        let b4 = c(2) * a4 + a1.clone() * a3;
        let b6 = a3.square() + c(4) * a6;
        let b8 = a1.square() * a6 + c(4) * a2 * a6 - a1.clone() * a3 * a4 + a2.clone() * &a3.square() - a4.square();
        -(b2.square() * &b8) - c(8) * b4.pow(3) - c(27) * b6.square() + c(9) * b2 * &b4 * &b6
    }

    pub fn on_curve(&self, p: &Point<F>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                let lhs = y.square() + self.a1.clone() * x * y + self.a3.clone() * y;
                let rhs = x.pow(3) + self.a2.clone() * &x.square() + self.a4.clone() * x + &self.a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, p: &Point<F>) -> Result<()> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn neg(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                Point::Affine { x: x.clone(), y: -y.clone() - self.a1.clone() * x - &self.a3 }
            }
        }
    }

    /// Group law with membership checks on both inputs.
    pub fn add(&self, p: &Point<F>, q: &Point<F>) -> Result<Point<F>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &Point<F>) -> Result<Point<F>> {
        self.add(p, p)
    }

    /// `n * p`, negative `n` allowed.
    pub fn scalar_mul(&self, n: i64, p: &Point<F>) -> Result<Point<F>> {
        self.check(p)?;
        Ok(self.mul_unchecked(n, p))
    }

    pub(crate) fn add_unchecked(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let Curve { a1, a2, a3, a4, a6 } = self;
        let (slope, intercept) = if x1 == x2 {
            let denom = F::from_i64(2) * y1 + a1.clone() * x1 + a3;
            if denom.is_zero() || (y1.clone() + y2 + a1.clone() * x2 + a3).is_zero() {
                return Point::Infinity;
            }
            let inv = denom.inv().expect("nonzero");
            let slope = (F::from_i64(3) * &x1.square() + F::from_i64(2) * a2 * x1 + a4 - a1.clone() * y1) * &inv;
            let intercept = (-x1.pow(3) + a4.clone() * x1 + F::from_i64(2) * a6 - a3.clone() * y1) * &inv;
            (slope, intercept)
        } else {
            let inv = (x2.clone() - x1).inv().expect("distinct x");
            let slope = (y2.clone() - y1) * &inv;
            let intercept = (y1.clone() * x2 - y2.clone() * x1) * &inv;
            (slope, intercept)
        };
        let x3 = slope.square() + a1.clone() * &slope - a2 - x1 - x2;
        let y3 = -(slope + a1) * &x3 - intercept - a3;
        Point::Affine { x: x3, y: y3 }
    }

    pub(crate) fn mul_unchecked(&self, n: i64, p: &Point<F>) -> Point<F> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        let mut addend = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &addend);
            }
            k >>= 1;
            if k > 0 {
                addend = self.add_unchecked(&addend, &addend);
            }
        }
        acc
    }

    /// Least `n <= bound` with `n * p = O`, or `None` if there is none up to
    /// the bound.
    ///
    /// Only multiples up to `bound/2 + 1` are formed: `2m * p = O` iff
    /// `m p = -(m p)`, and `(2m+1) p = O` iff `(m+1) p = -(m p)`. Over a
    /// function field `None` means "no torsion found up to the bound", not a
    /// proof of infinite order.
    pub fn torsion_order(&self, p: &Point<F>, bound: u32) -> Result<Option<u32>> {
        self.check(p)?;
        if p.is_infinity() {
            return Ok(Some(1));
        }
        let mut multiples = alloc::vec![Point::Infinity, p.clone()];
        for n in 2..=bound {
            let m = (n / 2) as usize;
            while multiples.len() <= m + 1 {
                let next = self.add_unchecked(multiples.last().expect("nonempty"), p);
                multiples.push(next);
            }
            let hit = if n % 2 == 0 {
                multiples[m] == self.neg(&multiples[m])
            } else {
                multiples[m + 1] == self.neg(&multiples[m])
            };
            if hit {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// Applies a ring map coefficientwise, e.g. to specialize `Q(u)` curves.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Curve<G>> {
        Curve::new(f(&self.a1)?, f(&self.a2)?, f(&self.a3)?, f(&self.a4)?, f(&self.a6)?)
    }
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;
    use super::*;
    use crate::{Rational, RatFunc};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn alpha2() -> Curve<Rational> {
        Curve::from_cubic(q(3), q(1), q(-1)).unwrap()
    }

    #[test]
    fn triple_of_generator_on_alpha2_curve() {
        let c = alpha2();
        let p = Point::new(q(1), q(2));
        assert_eq!(c.scalar_mul(3, &p).unwrap(), Point::new(q(337), q(6214)));
    }

    #[test]
    fn identity_and_inverse() {
        let c = alpha2();
        let p = Point::new(q(1), q(2));
        assert_eq!(c.add(&p, &c.neg(&p)).unwrap(), Point::Infinity);
        assert_eq!(c.add(&p, &Point::Infinity).unwrap(), p);
        assert_eq!(c.scalar_mul(0, &p).unwrap(), Point::Infinity);
        assert_eq!(c.scalar_mul(-1, &p).unwrap(), c.neg(&p));
        assert!(c.on_curve(&Point::Infinity));
    }

    #[test]
    fn off_curve_points_are_rejected() {
        let c = alpha2();
        let bad = Point::new(q(1), q(3));
        assert_eq!(c.add(&bad, &bad), Err(Error::NotOnCurve));
        assert_eq!(c.torsion_order(&bad, 12), Err(Error::NotOnCurve));
    }

    #[test]
    fn singular_cubic_is_rejected() {
        // y^2 = x^3
        assert_eq!(Curve::from_cubic(q(0), q(0), q(0)), Err(Error::SingularCurve));
        // y^2 = x^2 (x - 1)
        assert_eq!(Curve::from_cubic(q(-1), q(0), q(0)), Err(Error::SingularCurve));
    }

    #[test]
    fn long_form_law_matches_completed_square() {
        // y^2 + y = x^3 - x  <->  Y^2 = X^3 - 16X + 16 with X = 4x, Y = 8y + 4
        let long = Curve::new(q(0), q(0), q(1), q(-1), q(0)).unwrap();
        let short = Curve::from_cubic(q(0), q(-16), q(16)).unwrap();
        let p = Point::new(q(0), q(0));
        for n in 1..8 {
            let a = long.scalar_mul(n, &p).unwrap();
            let b = short.scalar_mul(n, &Point::new(q(0), q(4))).unwrap();
            match (a, b) {
                (Point::Affine { x, y }, Point::Affine { x: bx, y: by }) => {
                    assert_eq!(q(4) * x, bx);
                    assert_eq!(q(8) * y + q(4), by);
                }
                (a, b) => unreachable!("mismatch {a:?} {b:?}"),
            }
        }
    }

    #[test]
    fn torsion_orders_over_rationals() {
        // y^2 = x^3 + 1 has torsion Z/6: (2, 3) has order 6, (0, 1) order 3, (-1, 0) order 2
        let c = Curve::from_cubic(q(0), q(0), q(1)).unwrap();
        assert_eq!(c.torsion_order(&Point::new(q(2), q(3)), 12), Ok(Some(6)));
        assert_eq!(c.torsion_order(&Point::new(q(0), q(1)), 12), Ok(Some(3)));
        assert_eq!(c.torsion_order(&Point::new(q(-1), q(0)), 12), Ok(Some(2)));
        assert_eq!(c.torsion_order(&Point::Infinity, 12), Ok(Some(1)));
        assert_eq!(alpha2().torsion_order(&Point::new(q(1), q(2)), 12), Ok(None));
        assert_eq!(alpha2().torsion_order(&Point::new(q(-1), q(0)), 12), Ok(Some(2)));
    }

    #[test]
    fn doubling_over_function_field() {
        let u = RatFunc::var();
        let c = |n: i64| RatFunc::from_i64(n);
        let a4 = c(4) * (u.pow(4) - c(1)).pow(2);
        let curve = Curve::from_cubic(c(0), a4, c(0)).unwrap();
        let x = c(2) * (u.square() + c(1)) * (u.clone() - c(1)).pow(2);
        let y = c(4) * (u.square() + c(1)).pow(2) * (u.clone() - c(1)).pow(2);
        let p = Point::new(x, y);
        assert!(curve.on_curve(&p));
        let doubled = curve.double(&p).unwrap();
        assert_eq!(doubled, Point::new(c(4) * u.square(), -(c(4) * u.clone() * (u.pow(4) + c(1)))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn group_laws(m in -4i64..5, n in -4i64..5, k in -4i64..5, with_torsion in any::<bool>()) {
            let c = alpha2();
            let p = Point::new(q(1), q(2));
            let t = Point::new(q(-1), q(0));
            let mut a = c.scalar_mul(m, &p).unwrap();
            if with_torsion {
                a = c.add(&a, &t).unwrap();
            }
            let b = c.scalar_mul(n, &p).unwrap();
            let d = c.add(&c.scalar_mul(k, &p).unwrap(), &t).unwrap();
            prop_assert!(c.on_curve(&a) && c.on_curve(&b) && c.on_curve(&d));
            prop_assert_eq!(c.add(&a, &b).unwrap(), c.add(&b, &a).unwrap());
            let left = c.add(&c.add(&a, &b).unwrap(), &d).unwrap();
            let right = c.add(&a, &c.add(&b, &d).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(c.add(&a, &c.neg(&a)).unwrap(), Point::Infinity);
            prop_assert_eq!(c.scalar_mul(m + n, &p).unwrap(), c.add(&c.scalar_mul(m, &p).unwrap(), &b).unwrap());
        }
    }
}
