//! Coordinate changes between curve models and the objects they encode.

use super::{Curve, CurveId, Point};
use crate::{Error, Field, Result};

/// Sends a point of the `E_r` model to `(alpha, s)` with
/// `alpha = 2r(r^4 - 1)/(x - 2r^4)` and `s = r(x - 2)/(x - 2r^4)`.
///
/// The caller still has to reject `s` in `{+-1, +-r}`.
pub fn er_to_alpha_s<F: Field>(r: &F, p: &Point<F>) -> Result<(F, F)> {
    let Point::Affine { x, .. } = p else {
        return Err(Error::Pole);
    };
    let r4 = r.pow(4);
    let inv = (x.clone() - F::from_i64(2) * &r4).inv().ok_or(Error::Pole)?;
    let alpha = F::from_i64(2) * r * &(r4 - F::one()) * &inv;
    let s = r.clone() * &(x.clone() - F::from_i64(2)) * &inv;
    Ok((alpha, s))
}

/// A point on `x^3 + y^3 = z^3 + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FermatPoint<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

impl<F: Field> FermatPoint<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        FermatPoint { x, y, z }
    }

    pub fn on_surface(&self) -> bool {
        self.x.pow(3) + self.y.pow(3) == self.z.pow(3) + F::one()
    }
}

/// A one-parameter slice of the Fermat cubic surface, each an elliptic curve.
#[derive(Debug, Clone, PartialEq)]
pub enum CubicSection<F> {
    /// Fixed `z`: the curve `x^3 + y^3 = c` with `c = z^3 + 1`, modelled by
    /// `cubicZ` through `X = 3c/(x+y)`, `Y = 9cy/(x+y)`.
    FixedZ(F),
    /// Fixed `k = x + y`, modelled by `cubicK` through `X = 3kz`,
    /// `Y = 9k^2(x - k/2)`.
    FixedK(F),
}

impl<F: Field> CubicSection<F> {
    pub fn curve(&self) -> Result<Curve<F>> {
        match self {
            CubicSection::FixedZ(z) => CurveId::CubicZ.build(core::slice::from_ref(z)),
            CubicSection::FixedK(k) => CurveId::CubicK.build(core::slice::from_ref(k)),
        }
    }

    /// Surface point to curve point; the point must lie in this slice.
    pub fn to_curve(&self, p: &FermatPoint<F>) -> Result<Point<F>> {
        if !p.on_surface() {
            return Err(Error::NotOnCurve);
        }
        let c = |n: i64| F::from_i64(n);
        match self {
            CubicSection::FixedZ(z) => {
                if &p.z != z {
                    return Err(Error::NotOnCurve);
                }
                let cz = z.pow(3) + c(1);
                let inv = (p.x.clone() + &p.y).inv().ok_or(Error::Pole)?;
                Ok(Point::new(c(3) * &cz * &inv, c(9) * &cz * &p.y * &inv))
            }
            CubicSection::FixedK(k) => {
                if p.x.clone() + &p.y != *k {
                    return Err(Error::NotOnCurve);
                }
                let half_k = k.clone() * &c(2).inv().expect("nonzero");
                Ok(Point::new(c(3) * k * &p.z, c(9) * &k.square() * &(p.x.clone() - half_k)))
            }
        }
    }

    /// Curve point back to the surface.
    pub fn from_curve(&self, p: &Point<F>) -> Result<FermatPoint<F>> {
        let curve = self.curve()?;
        if !curve.on_curve(p) {
            return Err(Error::NotOnCurve);
        }
        let Point::Affine { x: big_x, y: big_y } = p else {
            return Err(Error::Pole);
        };
        let c = |n: i64| F::from_i64(n);
        match self {
            CubicSection::FixedZ(z) => {
                let cz = z.pow(3) + c(1);
                let inv = (c(3) * big_x).inv().ok_or(Error::Pole)?;
                let x = (c(9) * &cz - big_y.clone()) * &inv;
                let y = big_y.clone() * &inv;
                Ok(FermatPoint::new(x, y, z.clone()))
            }
            CubicSection::FixedK(k) => {
                let inv_3k = (c(3) * k).inv().ok_or(Error::Pole)?;
                let inv_9k2 = (c(9) * &k.square()).inv().ok_or(Error::Pole)?;
                let half_k = k.clone() * &c(2).inv().expect("nonzero");
                let x = half_k + big_y.clone() * &inv_9k2;
                let y = k.clone() - x.clone();
                Ok(FermatPoint::new(x, y, big_x.clone() * &inv_3k))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;
    use super::*;
    use crate::{RatFunc, Rational};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn alpha_s_at_337() {
        let (alpha, s) = er_to_alpha_s(&q(337), &Point::new(q(4372394120642), q(0))).unwrap();
        assert_eq!((alpha, s), (q(2), q(339)));
    }

    #[test]
    fn pole_at_two_r_fourth() {
        let r = q(3);
        assert_eq!(er_to_alpha_s(&r, &Point::new(q(162), q(0))), Err(Error::Pole));
        assert_eq!(er_to_alpha_s(&r, &Point::Infinity), Err(Error::Pole));
    }

    #[test]
    fn torsion_point_gives_trivial_s() {
        let r = RatFunc::var();
        let c = |n: i64| RatFunc::from_i64(n);
        let t = Point::new(c(2), c(2) * (r.pow(4) - c(1)));
        let (_, s) = er_to_alpha_s(&r, &t).unwrap();
        assert!(s.is_zero() || s == c(1) || s == c(-1) || s == r || s == -r.clone(), "{s}");
    }

    #[test]
    fn fixed_z_doubling_pullback() {
        let z = RatFunc::var();
        let c = |n: i64| RatFunc::from_i64(n);
        let section = CubicSection::FixedZ(z.clone());
        let curve = section.curve().unwrap();
        let w = z.square() - z.clone() + c(1);
        let p = Point::new(c(3) * &w, c(9) * &w);
        assert!(curve.on_curve(&p));
        assert_eq!(section.from_curve(&p).unwrap(), FermatPoint::new(z.clone(), c(1), z.clone()));
        let back = section.from_curve(&curve.double(&p).unwrap()).unwrap();
        let z3 = z.pow(3);
        assert_eq!(back.x, -(c(2) * &z3 + c(1)) * (z3.clone() - c(1)).recip().unwrap());
        assert_eq!(back.y, z.clone() * (z3.clone() + c(2)) * (z3 - c(1)).recip().unwrap());
        assert!(back.on_surface());
    }

    #[test]
    fn fixed_k_points() {
        let k = RatFunc::var();
        let c = |n: i64| RatFunc::from_i64(n);
        let half = RatFunc::from_rational(&Rational::new(9, 2).unwrap());
        let section = CubicSection::FixedK(k.clone());
        let curve = section.curve().unwrap();
        let p = Point::new(c(3) * &k.square() - c(3) * &k, half.clone() * &k.square() * &(k.clone() - c(2)));
        let q_pt = Point::new(
            c(3) * &k.square() + c(6) * &k + c(9),
            half * (k.pow(3) + c(4) * &k.square() + c(6) * &k + c(6)),
        );
        assert!(curve.on_curve(&p));
        assert!(curve.on_curve(&q_pt));
        let fp = section.from_curve(&p).unwrap();
        assert_eq!(fp, FermatPoint::new(k.clone() - c(1), c(1), k.clone() - c(1)));
        assert_eq!(section.to_curve(&fp).unwrap(), p);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trips(n in -4i64..5, zn in -6i64..7, zd in 1i64..5) {
            let z = Rational::new(zn, zd).unwrap();
            prop_assume!(!z.is_zero() && z != q(-1));
            let section = CubicSection::FixedZ(z.clone());
            let curve = section.curve().unwrap();
            let one = q(1);
            let w = z.clone() * &z - z.clone() + one;
            let p = curve.scalar_mul(n, &Point::new(q(3) * &w, q(9) * &w)).unwrap();
            if let Ok(fp) = section.from_curve(&p) {
                prop_assert!(fp.on_surface());
                if let Ok(back) = section.to_curve(&fp) {
                    prop_assert_eq!(back, p);
                }
                let k = fp.x.clone() + &fp.y;
                if !k.is_zero() {
                    let ks = CubicSection::FixedK(k);
                    let image = ks.to_curve(&fp).unwrap();
                    prop_assert!(ks.curve().unwrap().on_curve(&image));
                    prop_assert_eq!(ks.from_curve(&image).unwrap(), fp);
                }
            }
        }
    }
}
