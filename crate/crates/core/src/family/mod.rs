//! The explicit one-parameter families of regular quartic triples.
//!
//! Every function is generic over [`Field`], so the same code produces
//! numeric triples over `Q` and the symbolic triple over `Q(u)` that
//! [`symbolic_verify`] checks.

mod proof;

pub use proof::symbolic_verify;

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::Sign;
use crate::triple::RegularTriple;
use crate::{Error, Field, KthRoot, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `s = (u^2+1)/(u^2-1) r`, from `2P` on `y^2 = x^3 + 4(u^4-1)^2 x`.
    Fam1,
    /// `s = alpha r`.
    Fam2,
    /// `Fam2` at `alpha = (k u^2 + 1)/(k u^2 - 1)`.
    Fam2k,
    /// `r = 2u/(3-u^2)` with `s = 8u^2/(u^4-9)`.
    Fam3a,
    /// `r = 2u/(3-u^2)` with `s = (u^4-9)/(8u^2)`.
    Fam3b,
    /// The family with `c = s^2 + t^2` a square.
    Fam4,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] =
        [FamilyId::Fam1, FamilyId::Fam2, FamilyId::Fam2k, FamilyId::Fam3a, FamilyId::Fam3b, FamilyId::Fam4];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Fam1 => "fam1",
            FamilyId::Fam2 => "fam2",
            FamilyId::Fam2k => "fam2k",
            FamilyId::Fam3a => "fam3a",
            FamilyId::Fam3b => "fam3b",
            FamilyId::Fam4 => "fam4",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyId::Fam2 => &["alpha"],
            FamilyId::Fam2k => &["k", "u"],
            _ => &["u"],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// `c[0] + c[1] x + c[2] x^2 + ..` by Horner's rule.
pub(crate) fn eval_int_poly<F: Field>(x: &F, coeffs: &[i64]) -> F {
    coeffs.iter().rev().fold(F::zero(), |acc, &c| acc * x + F::from_i64(c))
}

fn excluded<F: Field>(id: FamilyId, name: &str, value: &F, forbidden: &[i64]) -> Result<()> {
    match forbidden.iter().find(|&&n| *value == F::from_i64(n)) {
        Some(n) => Err(Error::ExcludedParameter(format!("{id} excludes {name} = {n}"))),
        None => Ok(()),
    }
}

fn div<F: Field>(id: FamilyId, num: F, den: &F) -> Result<F> {
    num.checked_div(den).map_err(|_| Error::ExcludedParameter(format!("{id}: a denominator vanishes")))
}

fn check_arity<F>(id: FamilyId, params: &[F]) -> Result<()> {
    let n = id.param_names().len();
    if params.len() == n {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{id} takes {n} parameter(s), got {}", params.len())))
    }
}

/// `r = -(a^4 + 6a^2 - 3)/(3a^4 - 6a^2 - 1)`.
fn fam2_r<F: Field>(id: FamilyId, alpha: &F) -> Result<F> {
    let num = eval_int_poly(alpha, &[-3, 0, 6, 0, 1]);
    let den = eval_int_poly(alpha, &[-1, 0, -6, 0, 3]);
    div(id, -num, &den)
}

/// `alpha = (k u^2 + 1)/(k u^2 - 1)`.
pub fn fam2k_alpha<F: Field>(k: &F, u: &F) -> Result<F> {
    let ku2 = k.clone() * &u.square();
    div(FamilyId::Fam2k, ku2.clone() + F::one(), &(ku2 - F::one()))
}

/// `(r, s)` for the family; `t` is left to [`family_rst`].
pub fn family_rs<F: Field>(id: FamilyId, params: &[F]) -> Result<(F, F)> {
    check_arity(id, params)?;
    let c = |n: i64| F::from_i64(n);
    match id {
        FamilyId::Fam1 => {
            let u = &params[0];
            excluded(id, "u", u, &[0, 1, -1])?;
            let num = u.pow(4) + c(1);
            let r = div(id, num.clone(), &(c(2) * u * &(u.square() + c(1))))?;
            let s = div(id, num, &(c(2) * u * &(u.square() - c(1))))?;
            Ok((r, s))
        }
        FamilyId::Fam2 => {
            let alpha = &params[0];
            excluded(id, "alpha", alpha, &[0, 1, -1])?;
            let r = fam2_r(id, alpha)?;
            Ok((r.clone(), r * alpha))
        }
        FamilyId::Fam2k => {
            let (k, u) = (&params[0], &params[1]);
            excluded(id, "k", k, &[0])?;
            excluded(id, "u", u, &[0])?;
            let alpha = fam2k_alpha(k, u)?;
            excluded(id, "alpha", &alpha, &[0, 1, -1])?;
            let r = fam2_r(id, &alpha)?;
            Ok((r.clone(), r * &alpha))
        }
        FamilyId::Fam3a | FamilyId::Fam3b => {
            let u = &params[0];
            excluded(id, "u", u, &[0, 1, -1, 3, -3])?;
            let r = div(id, c(2) * u, &(c(3) - u.square()))?;
            let u4m9 = u.pow(4) - c(9);
            let eight_u2 = c(8) * &u.square();
            let s = if id == FamilyId::Fam3a { div(id, eight_u2, &u4m9)? } else { div(id, u4m9, &eight_u2)? };
            Ok((r, s))
        }
        FamilyId::Fam4 => {
            let (r, s, _) = fam4_rst(&params[0])?;
            Ok((r, s))
        }
    }
}

fn fam4_rst<F: Field>(u: &F) -> Result<(F, F, F)> {
    let id = FamilyId::Fam4;
    let e = |coeffs: &[i64]| eval_int_poly(u, coeffs);
    let t = div(id, e(&[-1, -2, 3]), &(F::from_i64(2) * &e(&[1, 0, 3])))?;
    let s = div(id, e(&[-1, 2, 3]), &(F::from_i64(4) * u))?;
    let r = div(id, e(&[1, 0, 22, 0, 9]), &(F::from_i64(2) * &e(&[1, -2, 2, 6, 9])))?;
    Ok((r, s, t))
}

/// `(r, s, t)` with `(s^2 r^2 - 1)/(s^2 - r^2) = t^2`.
///
/// `t` is printed explicitly only for `fam4`; elsewhere it is extracted as an
/// exact square root, nonnegative over `Q`.
pub fn family_rst<F: Field + KthRoot>(id: FamilyId, params: &[F]) -> Result<(F, F, F)> {
    if id == FamilyId::Fam4 {
        check_arity(id, params)?;
        return fam4_rst(&params[0]);
    }
    let (r, s) = family_rs(id, params)?;
    let (r2, s2) = (r.square(), s.square());
    let t2 = div(id, s2.clone() * &r2 - F::one(), &(s2 - r2))?;
    let t = t2
        .kth_root(2)
        .ok_or_else(|| Error::Degenerate(format!("{id}: (s^2 r^2 - 1)/(s^2 - r^2) = {t2} is not a square")))?;
    Ok((r, s, t))
}

/// The regular triple of the family; sporadic parameters whose elements
/// vanish or collide are reported as [`Error::Degenerate`].
pub fn family_triple<F: Field + KthRoot>(id: FamilyId, params: &[F]) -> Result<RegularTriple<F>> {
    let (r, s, t) = family_rst(id, params)?;
    let triple = RegularTriple::from_rst(r, s, t, 2);
    if !triple.is_nondegenerate() {
        return Err(Error::Degenerate(format!("{id} gives {{{}, {}, {}}}", triple.a, triple.b, triple.c)));
    }
    Ok(triple)
}

/// The `(a, b, c)` closed forms as printed, where the family has them.
pub fn printed_abc<F: Field>(id: FamilyId, params: &[F]) -> Result<Option<[F; 3]>> {
    check_arity(id, params)?;
    let c = |n: i64| F::from_i64(n);
    let x = &params[0];
    let e = |coeffs: &[i64]| eval_int_poly(x, coeffs);
    let abc = match id {
        FamilyId::Fam1 => {
            let u = x;
            let (u4p1, u2m1, u2p1, u4) = (e(&[1, 0, 0, 0, 1]), e(&[-1, 0, 1]), e(&[1, 0, 1]), u.pow(4));
            let a = div(id, u4p1.square(), &e(&[-1, 0, 0, 0, 1]).square())?;
            let b = div(
                id,
                e(&[1, 0, -4, 0, -6, 0, -4, 0, 1]) * &e(&[1, 0, 4, 0, 10, 0, 4, 0, 1]) * &u2m1.square(),
                &(c(16) * &u4p1.square() * &u2p1.square() * &u4),
            )?;
            let cc = div(
                id,
                e(&[1, 0, 4, 0, -6, 0, 4, 0, 1]) * &e(&[1, 0, -4, 0, 10, 0, -4, 0, 1]) * &u2p1.square(),
                &(c(16) * &u4p1.square() * &u2m1.square() * &u4),
            )?;
            [a, b, cc]
        }
        FamilyId::Fam2 => {
            let (p, q) = (e(&[-3, 0, 6, 0, 1]), e(&[-1, 0, -6, 0, 3]));
            let a2p1 = e(&[1, 0, 1]);
            let both = q.square() * &p.square();
            let a = div(id, p.square() * &e(&[1, 1]) * &e(&[-1, 1]), &q.square())?;
            let b = div(
                id,
                c(-16)
                    * e(&[1, 0, -2, 0, 5])
                    * &e(&[5, 0, -2, 0, 1])
                    * &e(&[-1, 2, 1])
                    * &e(&[-1, -2, 1])
                    * &a2p1,
                &both,
            )?;
            let a2 = x.square();
            let cc = div(
                id,
                (a2p1.pow(4) + c(16) * &a2 * &e(&[-1, 0, 1]).square())
                    * &(e(&[-1, 1]).pow(4) + c(4) * &a2)
                    * &(e(&[1, 1]).pow(4) + c(4) * &a2)
                    * &a2p1,
                &both,
            )?;
            [a, b, cc]
        }
        FamilyId::Fam3a => {
            let u = x;
            let u4m9 = e(&[-9, 0, 0, 0, 1]);
            let a = div(id, c(-4) * e(&[-9, 0, 1]) * &e(&[-1, 0, 1]) * &u.square(), &u4m9.square())?;
            let b = div(id, e(&[9, 0, -2, 0, 1]) * &e(&[3, 0, 1]).square(), &(c(4) * &e(&[-3, 0, 1]).square() * &u.square()))?;
            let cc = div(
                id,
                e(&[81, 0, 0, 0, 46, 0, 0, 0, 1]) * &e(&[9, 0, 1]) * &e(&[1, 0, 1]),
                &(c(4) * &u4m9.square() * &u.square()),
            )?;
            [a, b, cc]
        }
        FamilyId::Fam3b => {
            let u = x;
            let w = e(&[9, 0, 2, 0, 1]);
            let u2m3 = e(&[-3, 0, 1]);
            let u4 = u.pow(4);
            let a = div(id, w.square() * &e(&[-1, 0, 1]) * &e(&[-9, 0, 1]), &(c(64) * &u2m3.square() * &u4))?;
            let b = div(id, c(-64) * e(&[9, 0, -2, 0, 1]) * &u4, &(w.square() * &u2m3.square()))?;
            let cc = div(
                id,
                e(&[81, 0, 0, 0, 46, 0, 0, 0, 1]) * &e(&[9, 0, 1]) * &e(&[1, 0, 1]) * &u2m3.square(),
                &(c(64) * &w.square() * &u4),
            )?;
            [a, b, cc]
        }
        FamilyId::Fam2k | FamilyId::Fam4 => return Ok(None),
    };
    Ok(Some(abc))
}

/// A numeric member of a family.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyPoint {
    pub family: FamilyId,
    pub params: Vec<Rational>,
    pub triple: RegularTriple<Rational>,
}

pub fn family_point(id: FamilyId, params: &[Rational]) -> Result<FamilyPoint> {
    let triple = family_triple(id, params)?;
    Ok(FamilyPoint { family: id, params: params.to_vec(), triple })
}

/// Exact signs of a `fam1` triple, with the sign of the octic factor of `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignReport {
    pub a: Sign,
    pub b: Sign,
    pub c: Sign,
    /// Sign of `u^8 - 4u^6 - 6u^4 - 4u^2 + 1`.
    pub octic_factor: Sign,
}

impl SignReport {
    pub fn all_positive(&self) -> bool {
        [self.a, self.b, self.c].iter().all(|s| *s == Sign::Positive)
    }
}

/// The octic factor deciding the sign of `b` in `fam1`.
pub const FAM1_SIGN_FACTOR: [i64; 9] = [1, 0, -4, 0, -6, 0, -4, 0, 1];

/// Classifies signs of the `fam1` triple at `u` by exact arithmetic. All
/// other factors of `a, b, c` are squares or have no real roots, so
/// `sign(b)` equals the sign of the octic factor.
pub fn positivity_classify(u: &Rational) -> Result<SignReport> {
    let triple = family_triple(FamilyId::Fam1, core::slice::from_ref(u))?;
    let octic = eval_int_poly(u, &FAM1_SIGN_FACTOR);
    Ok(SignReport { a: triple.a.sign(), b: triple.b.sign(), c: triple.c.sign(), octic_factor: octic.sign() })
}

/// The eight candidate values of `s` for the Pell family:
/// `+-(u^4-9)/(8u^2)`, `+-8u^2/(u^4-9)`, `+-2u(u^2-3)/(u^4+2u^2+9)` and
/// `+-(u^4+2u^2+9)/(2u(u^2-3))`, in that order.
pub fn fam3_svalues<F: Field>(u: &F) -> Result<[F; 8]> {
    let id = FamilyId::Fam3a;
    let p = (u.pow(4) - F::from_i64(9), F::from_i64(8) * &u.square());
    let q = (F::from_i64(2) * u * &(u.square() - F::from_i64(3)), eval_int_poly(u, &[9, 0, 2, 0, 1]));
    let v1 = div(id, p.0.clone(), &p.1)?;
    let v2 = div(id, p.1, &p.0)?;
    let v3 = div(id, q.0.clone(), &q.1)?;
    let v4 = div(id, q.1, &q.0)?;
    Ok([v1.clone(), -v1, v2.clone(), -v2, v3.clone(), -v3, v4.clone(), -v4])
}

impl fmt::Display for FamilyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<_> = self.params.iter().map(|p| p.to_string()).collect();
        let t = &self.triple;
        write!(f, "{}({}): ({}, {}, {})", self.family, params.join(", "), t.a, t.b, t.c)
    }
}
