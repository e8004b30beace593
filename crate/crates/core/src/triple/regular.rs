use alloc::format;
use alloc::vec;

use super::tuple::{verify_tuple_with, PowerTuple, Verdict, WitnessPolicy};
use crate::{Error, Field, KthRoot, Result};

/// `a = s^k - r^k`, `b = t^k - r^k`, `c = s^k + t^k` with
/// `(r^k s^k - 1)/(s^k - r^k) = t^k`, a `2k`-th power triple with witnesses
/// `ab+1 = r^2k`, `ac+1 = s^2k`, `bc+1 = t^2k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularTriple<F> {
    pub half_power: u32,
    pub r: F,
    pub s: F,
    pub t: F,
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Field> RegularTriple<F> {
    /// Builds the triple from `(r, s, t)` without checking the defining
    /// relation; see [`RegularTriple::is_valid`].
    pub fn from_rst(r: F, s: F, t: F, half_power: u32) -> Self {
        let rk = r.pow(half_power);
        let sk = s.pow(half_power);
        let tk = t.pow(half_power);
        let a = sk.clone() - rk.clone();
        let b = tk.clone() - rk;
        let c = sk + tk;
        RegularTriple { half_power, r, s, t, a, b, c }
    }

    pub fn power(&self) -> u32 {
        2 * self.half_power
    }

    pub fn elements(&self) -> [F; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// Witnesses in pair order `(a,b), (a,c), (b,c)`.
    pub fn witnesses(&self) -> [F; 3] {
        [self.r.clone(), self.s.clone(), self.t.clone()]
    }

    /// Distinct nonzero elements with nonzero witnesses.
    pub fn is_nondegenerate(&self) -> bool {
        let [a, b, c] = self.elements();
        let zero_witness = self.r.is_zero() || self.s.is_zero() || self.t.is_zero();
        !(zero_witness || a.is_zero() || b.is_zero() || c.is_zero() || a == b || b == c || a == c)
    }

    /// Every invariant, checked exactly.
    pub fn is_valid(&self) -> bool {
        let k = self.half_power;
        let one = F::one();
        let [a, b, c] = self.elements();
        self.is_nondegenerate()
            && a.clone() * &b + &one == self.r.pow(2 * k)
            && a.clone() * &c + &one == self.s.pow(2 * k)
            && b.clone() * &c + &one == self.t.pow(2 * k)
            && c == a.clone() + &b + &(F::from_i64(2) * &self.r.pow(k))
            && regularity_defect(&a, &b, &c).is_zero()
    }

    pub fn negated(&self) -> [F; 3] {
        [-self.a.clone(), -self.b.clone(), -self.c.clone()]
    }
}

impl<F: Field + KthRoot> RegularTriple<F> {
    /// Independent re-verification through [`super::verify_tuple`].
    pub fn to_power_tuple(&self) -> Result<Option<PowerTuple<F>>> {
        Ok(verify_tuple_with(&self.elements(), self.power(), WitnessPolicy::RejectZero)?.tuple())
    }
}

/// `a^2 + b^2 + c^2 - 2ab - 2bc - 2ca - 4`, zero for regular triples.
pub fn regularity_defect<F: Field>(a: &F, b: &F, c: &F) -> F {
    let two = F::from_i64(2);
    a.square() + b.square() + c.square()
        - two.clone() * a * b
        - two.clone() * b * c
        - two * c * a
        - F::from_i64(4)
}

fn is_unit_or_zero<F: Field>(x: &F) -> bool {
    x.is_zero() || *x == F::one() || *x == -F::one()
}

/// Regular `2k`-th power triple from `(r, s)`, or `None` when
/// `(r^k s^k - 1)/(s^k - r^k)` is not a `k`-th power.
///
/// Requires `r, s` outside `{0, +-1}` and `s != +-r`. A triple whose
/// elements collide is reported as [`Error::Degenerate`].
pub fn construct_regular<F: Field + KthRoot>(r: &F, s: &F, k: u32) -> Result<Option<RegularTriple<F>>> {
    if k == 0 {
        return Err(Error::Precondition(format!("half power must be at least 1, got {k}")));
    }
    if is_unit_or_zero(r) || is_unit_or_zero(s) {
        return Err(Error::Precondition(format!("r and s must avoid 0 and +-1 (r = {r}, s = {s})")));
    }
    if s == r || *s == -r.clone() {
        return Err(Error::Precondition(format!("s must differ from +-r (r = {r}, s = {s})")));
    }
    let rk = r.pow(k);
    let sk = s.pow(k);
    let diff = sk.clone() - &rk;
    if diff.is_zero() {
        return Err(Error::Precondition(format!("s^{k} equals r^{k}")));
    }
    let tk = (rk * &sk - F::one()).checked_div(&diff)?;
    let Some(t) = tk.kth_root(k) else { return Ok(None) };
    let triple = RegularTriple::from_rst(r.clone(), s.clone(), t, k);
    if !triple.is_nondegenerate() {
        return Err(Error::Degenerate(format!(
            "(r, s) = ({r}, {s}) gives {{{}, {}, {}}}",
            triple.a, triple.b, triple.c
        )));
    }
    Ok(Some(triple))
}

/// `{-1/r^m, (r^k - 1)/r^m, r^m}` with `m = k/2`.
///
/// The first and last elements multiply to `-1`, so that pair carries a zero
/// witness; verification therefore runs with [`WitnessPolicy::AllowZero`].
pub fn bst_family<F: Field + KthRoot>(r: &F, k: u32) -> Result<PowerTuple<F>> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::Precondition(format!("power must be even and at least 2, got {k}")));
    }
    let rm = r.pow(k / 2);
    let inv = rm.inv().ok_or_else(|| Error::Precondition("r must be nonzero".into()))?;
    let elements = vec![-inv.clone(), (r.pow(k) - F::one()) * &inv, rm];
    match verify_tuple_with(&elements, k, WitnessPolicy::AllowZero)? {
        Verdict::Verified(t) => Ok(t),
        Verdict::Failed(f) => Err(Error::Degenerate(format!("{} pair(s) failed", f.len()))),
    }
}
