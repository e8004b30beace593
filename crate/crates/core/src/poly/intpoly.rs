//! Integer-coefficient helpers: multiplication and gcd without per-step
//! rational normalization.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::Rational;

/// `p = ints / denom` with `denom > 0` the lcm of coefficient denominators.
pub(super) fn to_integer(p: &Poly) -> (Vec<BigInt>, BigInt) {
    let denom = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p.coeffs().iter().map(|c| c.numer() * (&denom / c.denom())).collect();
    (ints, denom)
}

pub(super) fn from_integer(ints: Vec<BigInt>, denom: &BigInt) -> Poly {
    Poly::from_coeffs(ints.into_iter().map(|c| Rational::new(c, denom.clone()).expect("positive denominator")).collect())
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(super) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let Some(lead) = v.last() else { return v };
    let mut g = content(&v);
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd with positive leading coefficient; empty for `gcd(0, 0)`.
pub(super) fn gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive(prem(&a, &b));
        a = b;
        b = r;
    }
    a
}
