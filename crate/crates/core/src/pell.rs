//! Solutions of `p^2 - 3r^2 = 1` and the points they give on `E_r`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::curve::{er_to_alpha_s, CurveId, Point};
use crate::{Error, Field, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    /// 1 for the fundamental solution `(2, 1)`.
    pub index: usize,
    pub p: BigInt,
    pub r: BigInt,
}

impl PellSolution {
    pub fn holds(&self) -> bool {
        &self.p * &self.p - 3 * &self.r * &self.r == BigInt::from(1)
    }

    pub fn ratio(&self) -> Rational {
        Rational::new(self.p.clone(), self.r.clone()).expect("r > 0")
    }
}

/// The first `count` solutions, from `(2, 1)` via `p' = 2p + 3r`,
/// `r' = p + 2r`.
pub fn pell_sequence(count: usize) -> Vec<PellSolution> {
    let mut out = Vec::with_capacity(count);
    let (mut p, mut r) = (BigInt::from(2), BigInt::from(1));
    for index in 1..=count {
        let next = (2 * &p + 3 * &r, &p + 2 * &r);
        out.push(PellSolution { index, p, r });
        (p, r) = next;
    }
    out
}

/// `r = 2u/(3 - u^2)`, `p = (3 + u^2)/(3 - u^2)`, so `p^2 - 3r^2 = 1`.
pub fn pell_parametrize<F: Field>(u: &F) -> Result<(F, F)> {
    let u2 = u.square();
    let inv = (F::from_i64(3) - u2.clone()).inv().ok_or(Error::Pole)?;
    Ok((F::from_i64(2) * u * &inv, (F::from_i64(3) + u2) * &inv))
}

/// `(r^2 + 1, pr(1 - r^2))` on `E_r` for `p^2 - 3r^2 = 1`.
pub fn pell_point<F: Field>(r: &F, p: &F) -> Point<F> {
    let r2 = r.square();
    Point::new(r2.clone() + F::one(), p.clone() * r * &(F::one() - r2))
}

/// The eight torsion points of `E_r` with their orders: `O`, the three
/// points with `y = 0`, `(2r^4, +-2r^2(r^4-1))` and `(2, +-2(r^4-1))`.
pub fn er_torsion_points<F: Field>(r: &F) -> [(Point<F>, u32); 8] {
    let c = |n: i64| F::from_i64(n);
    let r2 = r.square();
    let r4 = r2.square();
    let y1 = c(2) * &r2 * &(r4.clone() - c(1));
    let y2 = c(2) * (r4.clone() - c(1));
    [
        (Point::Infinity, 1),
        (Point::new(-(c(2) * &r2), F::zero()), 2),
        (Point::new(c(2) * &r2, F::zero()), 2),
        (Point::new(r4.clone() + c(1), F::zero()), 2),
        (Point::new(c(2) * &r4, y1.clone()), 4),
        (Point::new(c(2) * &r4, -y1), 4),
        (Point::new(c(2), y2.clone()), 4),
        (Point::new(c(2), -y2), 4),
    ]
}

/// `s` and `t^2` obtained from `P + T` for one torsion point `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionImage<F> {
    pub order: u32,
    pub s: F,
    pub t_squared: F,
}

/// Applies [`er_to_alpha_s`] to the Pell point translated by each torsion
/// point of `E_r`, at `r = 2u/(3-u^2)`.
pub fn pell_torsion_images<F: Field>(u: &F) -> Result<Vec<TorsionImage<F>>> {
    let (r, p) = pell_parametrize(u)?;
    let curve = CurveId::Er.build(core::slice::from_ref(&r))?;
    let base = pell_point(&r, &p);
    let r2 = r.square();
    er_torsion_points(&r)
        .iter()
        .map(|(t, order)| {
            let q = curve.add(&base, t)?;
            let (_, s) = er_to_alpha_s(&r, &q)?;
            let s2 = s.square();
            let t_squared = (s2.clone() * &r2 - F::one()).checked_div(&(s2 - r2.clone()))?;
            Ok(TorsionImage { order: *order, s, t_squared })
        })
        .collect()
}

/// `u = -x/2` for a point `(x, y)` of `y^2 = x^3 - 12x`; then
/// `r = 2u/(3-u^2) = (y/(2(3-u^2)))^2` is a square.
pub fn rsq_parameter<F: Field>(p: &Point<F>) -> Option<F> {
    p.x().map(|x| -(x.clone() * &F::from_i64(2).inv().expect("nonzero")))
}
