//! The named curves, parametrized over any exact field.

use core::fmt;
use core::str::FromStr;

use super::{Curve, Point};
use crate::{Error, Field, Rational, Result};

/// Stable identifiers, also used as CLI names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveId {
    /// `(x + 2r^2)(x - 2r^2)(x - r^4 - 1)`, the quartic model for a fixed `r`.
    Er,
    /// `y^2 = x^3 + 4(u^4 - 1)^2 x`.
    Fam1,
    /// `y^2 = x^3 + 4k^2(k^2 u^4 - 1)^2 x`.
    Fam2k,
    /// `y^2 = x^3 + 4 alpha^2 (alpha^2 - 1)^2 x`.
    Fam2,
    /// `y^2 = x^3 - 12x`.
    Rsq,
    /// `y^2 = x^3 - u^2(u^2 - 1)^2 x`.
    Sec7,
    /// `Y^2 - 9(z^3 + 1)Y = X^3 - 27(z^3 + 1)^2`.
    CubicZ,
    /// `Y^2 = X^3 - 27k^3(k^3 - 4)/4`.
    CubicK,
    /// `y^2 = x^3 + 3x^2 + x - 1`, i.e. `t^2 = (r+1)(r^2+2r-1)/4` with `y = 2t`.
    Alpha2,
}

/// How model coordinates relate to the natural ones: `y_model = y_factor * y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scaling {
    pub y_factor: i64,
}

impl Scaling {
    pub fn to_model<F: Field>(&self, x: F, y: F) -> Point<F> {
        Point::new(x, F::from_i64(self.y_factor) * y)
    }

    pub fn from_model<F: Field>(&self, p: &Point<F>) -> Option<(F, F)> {
        match p {
            Point::Infinity => None,
            Point::Affine { x, y } => {
                let inv = F::from_i64(self.y_factor).inv().expect("nonzero scale");
                Some((x.clone(), y.clone() * inv))
            }
        }
    }
}

impl CurveId {
    pub const ALL: [CurveId; 9] = [
        CurveId::Er,
        CurveId::Fam1,
        CurveId::Fam2k,
        CurveId::Fam2,
        CurveId::Rsq,
        CurveId::Sec7,
        CurveId::CubicZ,
        CurveId::CubicK,
        CurveId::Alpha2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CurveId::Er => "E_r",
            CurveId::Fam1 => "fam1",
            CurveId::Fam2k => "fam2k",
            CurveId::Fam2 => "fam2",
            CurveId::Rsq => "rsq",
            CurveId::Sec7 => "sec7",
            CurveId::CubicZ => "cubicZ",
            CurveId::CubicK => "cubicK",
            CurveId::Alpha2 => "alpha2",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            CurveId::Er => &["r"],
            CurveId::Fam1 | CurveId::Sec7 => &["u"],
            CurveId::Fam2k => &["k", "u"],
            CurveId::Fam2 => &["alpha"],
            CurveId::Rsq | CurveId::Alpha2 => &[],
            CurveId::CubicZ => &["z"],
            CurveId::CubicK => &["k"],
        }
    }

    pub fn scaling(self) -> Scaling {
        match self {
            CurveId::Alpha2 => Scaling { y_factor: 2 },
            _ => Scaling { y_factor: 1 },
        }
    }

    /// Builds the curve; errors on a wrong parameter count or a singular
    /// specialization.
    pub fn build<F: Field>(self, params: &[F]) -> Result<Curve<F>> {
        let expected = self.param_names().len();
        if params.len() != expected {
            return Err(Error::Precondition(alloc::format!(
                "{} takes {} parameter(s), got {}",
                self.name(),
                expected,
                params.len()
            )));
        }
        let c = |n: i64| F::from_i64(n);
        let zero = F::zero;
        match self {
            CurveId::Er => {
                let r4 = params[0].pow(4);
                Curve::from_cubic(-(r4.clone() + c(1)), c(-4) * &r4, c(4) * &r4 * &(r4.clone() + c(1)))
            }
            CurveId::Fam1 => {
                let u = &params[0];
                Curve::from_cubic(zero(), c(4) * (u.pow(4) - c(1)).square(), zero())
            }
            CurveId::Fam2k => {
                let (k, u) = (&params[0], &params[1]);
                let inner = k.square() * &u.pow(4) - c(1);
                Curve::from_cubic(zero(), c(4) * &k.square() * &inner.square(), zero())
            }
            CurveId::Fam2 => {
                let a = &params[0];
                Curve::from_cubic(zero(), c(4) * &a.square() * &(a.square() - c(1)).square(), zero())
            }
            CurveId::Rsq => Curve::from_cubic(zero(), c(-12), zero()),
            CurveId::Sec7 => {
                let u = &params[0];
                Curve::from_cubic(zero(), -(u.square() * &(u.square() - c(1)).square()), zero())
            }
            CurveId::CubicZ => {
                let cz = params[0].pow(3) + c(1);
                Curve::new(zero(), zero(), c(-9) * &cz, zero(), c(-27) * &cz.square())
            }
            CurveId::CubicK => {
                let k3 = params[0].pow(3);
                let quarter = F::from_rational(&Rational::new(27, 4).expect("nonzero"));
                Curve::from_cubic(zero(), zero(), -(quarter * &k3 * &(k3.clone() - c(4))))
            }
            CurveId::Alpha2 => Curve::from_cubic(c(3), c(1), c(-1)),
        }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CurveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CurveId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(alloc::format!("unknown curve id {s:?}")))
    }
}
