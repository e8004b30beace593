use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_traits::Zero;

use super::Rational;

/// Types that can decide whether a value is an exact `k`-th power.
pub trait KthRoot: Sized {
    /// Returns some `w` with `w^k == self`, or `None` if no such `w` exists
    /// in the type. For even `k` the canonical root is returned (nonnegative
    /// for rationals).
    fn kth_root(&self, k: u32) -> Option<Self>;
}

/// Floor of the `k`-th root of `n`, and whether it is exact.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn int_kth_root(n: &BigUint, k: u32) -> (BigUint, bool) {
    assert!(k >= 1, "root degree must be at least 1");
    if n.is_zero() {
        return (BigUint::zero(), true);
    }
    let root = n.nth_root(k);
    let exact = &num_traits::pow(root.clone(), k as usize) == n;
    (root, exact)
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let (sign, magnitude) = (n.sign(), n.magnitude());
    if sign == BigSign::Minus && k.is_multiple_of(2) {
        return None;
    }
    let (root, exact) = int_kth_root(magnitude, k);
    exact.then(|| BigInt::from_biguint(if sign == BigSign::Minus { BigSign::Minus } else { BigSign::Plus }, root))
}

/// `k`-th root of a rational, nonnegative for even `k`.
///
/// A reduced fraction is a `k`-th power exactly when numerator and
/// denominator both are.
pub fn rational_kth_root(q: &Rational, k: u32) -> Option<Rational> {
    assert!(k >= 1, "root degree must be at least 1");
    let num = exact_int_root(q.numer(), k)?;
    let den = exact_int_root(q.denom(), k)?;
    Some(Rational::new(num, den).expect("denominator root is positive"))
}

impl KthRoot for Rational {
    fn kth_root(&self, k: u32) -> Option<Self> {
        rational_kth_root(self, k)
    }
}
