//! Euler's parametrization of `X^4 + Y^4 = Z^4 + W^4` and the reduction of
//! `XYZW = square` to a curve in `u = a + 1/a`.

use alloc::vec::Vec;

use crate::report::ProofReport;
use crate::poly::substitute;
use crate::{Poly, RatFunc, Rational};

/// `(coefficient, power of a, power of b)`.
type Term = (i64, u32, u32);

/// `X, Y, Z, W`, each homogeneous of degree 7 in `(a, b)`.
pub const EULER_TERMS: [[Term; 5]; 4] = [
    [(1, 7, 0), (1, 5, 2), (-2, 3, 4), (3, 2, 5), (1, 1, 6)],
    [(1, 6, 1), (-3, 5, 2), (-2, 4, 3), (1, 2, 5), (1, 0, 7)],
    [(1, 7, 0), (1, 5, 2), (-2, 3, 4), (-3, 2, 5), (1, 1, 6)],
    [(1, 6, 1), (3, 5, 2), (-2, 4, 3), (1, 2, 5), (1, 0, 7)],
];

/// `h(u)` with `XYZW = a^14 h(a + 1/a)` at `b = 1`.
pub const H_COEFFS: [i64; 13] = [324, 0, 351, 0, -80, 0, -266, 0, 141, 0, -23, 0, 1];
/// `g(t)` with `h(u) = g(u^2)`.
pub const G_COEFFS: [i64; 7] = [324, 351, -80, -266, 141, -23, 1];
/// `XZ / a^2` at `b = 1`.
pub const XZ_COEFFS: [i64; 13] = [1, 0, -13, 0, 6, 0, -2, 0, -3, 0, 2, 0, 1];
/// `YW` at `b = 1`.
pub const YW_COEFFS: [i64; 13] = [1, 0, 2, 0, -3, 0, -2, 0, 6, 0, -13, 0, 1];

fn dehomogenized(terms: &[Term]) -> Poly {
    terms.iter().fold(Poly::zero(), |acc, &(c, i, _)| acc + Poly::monomial(Rational::from(c), i as usize))
}

/// `X, Y, Z, W` as polynomials in `a` with `b = 1`.
pub fn euler_polys() -> [Poly; 4] {
    EULER_TERMS.map(|t| dehomogenized(&t))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerQuad {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub w: Rational,
    /// `{|X|, |Y|} = {|Z|, |W|}`: the identity holds trivially.
    pub degenerate: bool,
}

/// The parametrization at `b = 1`.
pub fn euler_quartic_parametrization(a: &Rational) -> EulerQuad {
    euler_quartic_homogeneous(a, &Rational::one())
}

/// Evaluates the homogeneous parametrization at `(a, b)`.
pub fn euler_quartic_homogeneous(a: &Rational, b: &Rational) -> EulerQuad {
    let eval = |terms: &[Term; 5]| {
        terms.iter().fold(Rational::zero(), |acc, &(c, i, j)| acc + Rational::from(c) * a.pow(i) * b.pow(j))
    };
    let [x, y, z, w] = EULER_TERMS.each_ref().map(eval);
    let mut lhs: Vec<Rational> = [&x, &y].iter().map(|v| v.abs()).collect();
    let mut rhs: Vec<Rational> = [&z, &w].iter().map(|v| v.abs()).collect();
    lhs.sort();
    rhs.sort();
    EulerQuad { degenerate: lhs == rhs, x, y, z, w }
}

impl EulerQuad {
    pub fn holds(&self) -> bool {
        self.x.pow(4) + self.y.pow(4) == self.z.pow(4) + self.w.pow(4)
    }

    pub fn square_product(&self) -> bool {
        use crate::KthRoot;
        (self.x.clone() * &self.y * &self.z * &self.w).kth_root(2).is_some()
    }
}

/// Symbolic checks of the reduction, all with `b = 1` plus the degree-7
/// homogeneity that lifts them back to `(a, b)`.
pub fn euler_reduction_check() -> ProofReport {
    let mut report = ProofReport::new("Euler quartic parametrization: XYZW = square");
    report.check(
        "X, Y, Z, W are homogeneous of degree 7 in (a, b)",
        EULER_TERMS.iter().flatten().all(|&(_, i, j)| i + j == 7),
    );
    let [x, y, z, w] = euler_polys();
    report.check("X^4 + Y^4 = Z^4 + W^4", x.pow(4) + y.pow(4) == z.pow(4) + w.pow(4));

    let xz = x.clone() * &z;
    let yw = y.clone() * &w;
    let a2 = Poly::monomial(Rational::one(), 2);
    let xz_stated = Poly::from_ints(&XZ_COEFFS);
    let yw_stated = Poly::from_ints(&YW_COEFFS);
    report.check("XZ = a^2 (a^12 + 2a^10 - 3a^8 - 2a^6 + 6a^4 - 13a^2 + 1)", xz == a2.clone() * &xz_stated);
    report.check("YW = a^12 - 13a^10 + 6a^8 - 2a^6 - 3a^4 + 2a^2 + 1", yw == yw_stated);
    report.check(
        "XZ / a^2 = a^12 YW(1/a)",
        yw.reversal(12).is_ok_and(|rev| xz.checked_div(&a2).is_ok_and(|q| q == rev)),
    );

    let product = xz * &yw;
    let h = Poly::from_ints(&H_COEFFS);
    report.check(
        "XYZW = a^14 h(a + 1/a), h = u^12 - 23u^10 + 141u^8 - 266u^6 - 80u^4 + 351u^2 + 324",
        product.symmetric_in_u(14).is_some_and(|found| found == h),
    );
    let a = RatFunc::var();
    let shift = a.clone() + a.recip().expect("nonzero");
    let lifted = substitute(&h, &shift) * RatFunc::from(Poly::monomial(Rational::one(), 14));
    report.check("h(a + 1/a) a^14 expands back to XYZW", lifted == RatFunc::from(product));
    let g = Poly::from_ints(&G_COEFFS);
    report.check(
        "h(u) = g(u^2) with g = t^6 - 23t^5 + 141t^4 - 266t^3 - 80t^2 + 351t + 324",
        g.compose(&Poly::monomial(Rational::one(), 2)) == h,
    );
    report
}
