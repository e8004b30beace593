use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::regular::RegularTriple;
use crate::{Error, KthRoot, Rational, Result};

/// `X^k + Y^k = Z^k + W^k` in positive integers, stored canonically with
/// `X < Y`, `Z < W`, `X < Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TaxicabHit {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub w: u64,
    pub k: u32,
    /// Whether `XYZW` is a perfect square.
    pub square_product: bool,
    /// `sqrt(XYZW)` when it is an integer.
    pub sqrt_witness: Option<u128>,
}

impl TaxicabHit {
    /// Validates and canonicalizes two representations of the same sum.
    pub fn new(pair1: (u64, u64), pair2: (u64, u64), k: u32) -> Result<Self> {
        let sort = |(a, b): (u64, u64)| if a <= b { (a, b) } else { (b, a) };
        let (mut p, mut q) = (sort(pair1), sort(pair2));
        if p == q {
            return Err(Error::Degenerate(format!("{{{}, {}}} appears on both sides", p.0, p.1)));
        }
        if p.0 == 0 || q.0 == 0 {
            return Err(Error::Precondition("entries must be positive".into()));
        }
        let pow = |n: u64| BigInt::from(n).pow(k);
        if pow(p.0) + pow(p.1) != pow(q.0) + pow(q.1) {
            return Err(Error::Precondition(format!(
                "{}^{k} + {}^{k} != {}^{k} + {}^{k}",
                p.0, p.1, q.0, q.1
            )));
        }
        if q.0 < p.0 {
            core::mem::swap(&mut p, &mut q);
        }
        let product = u128::from(p.0) * u128::from(p.1) * u128::from(q.0) * u128::from(q.1);
        let root = product.isqrt();
        let square = root * root == product;
        Ok(TaxicabHit {
            x: p.0,
            y: p.1,
            z: q.0,
            w: q.1,
            k,
            square_product: square,
            sqrt_witness: square.then_some(root),
        })
    }

    pub fn entries(&self) -> [u64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    /// The common value of both sums.
    pub fn sum(&self) -> BigInt {
        BigInt::from(self.x).pow(self.k) + BigInt::from(self.y).pow(self.k)
    }

    /// Recomputes both power sums and the square-product witness.
    pub fn recheck(&self) -> bool {
        TaxicabHit::new((self.x, self.y), (self.z, self.w), self.k).is_ok_and(|h| h == *self)
    }
}

impl fmt::Display for TaxicabHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k;
        write!(f, "{}^{k} + {}^{k} = {}^{k} + {}^{k}", self.x, self.y, self.z, self.w)
    }
}

/// An affine point `(x, y, z)` with `x^k + y^k = z^k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCandidate {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl AffineCandidate {
    pub fn satisfies(&self, k: u32) -> bool {
        self.x.pow(k) + self.y.pow(k) == self.z.pow(k) + Rational::one()
    }
}

/// All ways of dividing `X^k + Y^k = Z^k + W^k` by one entry to reach
/// `x^k + y^k = z^k + 1`.
///
/// For odd `k` the identity is rewritten as `v_0^k + .. + v_3^k = 0` with
/// `v = (X, Y, -Z, -W)`; any entry may become the `1` and any other the `z`,
/// which gives 24 candidates. For even `k` signs carry no information, so
/// only the eight positive arrangements are listed. Duplicates are removed,
/// first occurrence kept.
pub fn dehomogenize(x: u64, y: u64, z: u64, w: u64, k: u32) -> Result<Vec<AffineCandidate>> {
    let hit = TaxicabHit::new((x, y), (z, w), k)?;
    let [x, y, z, w] = hit.entries().map(Rational::from);
    let mut out: Vec<AffineCandidate> = Vec::new();
    let mut push = |c: AffineCandidate| {
        debug_assert!(c.satisfies(k));
        if !out.contains(&c) {
            out.push(c);
        }
    };
    if k % 2 == 1 {
        let v = [x, y, -z, -w];
        for i in 0..4 {
            let inv = v[i].recip().expect("positive entries");
            for j in (0..4).filter(|&j| j != i) {
                let rest: Vec<usize> = (0..4).filter(|&m| m != i && m != j).collect();
                for (m, n) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                    push(AffineCandidate {
                        x: -(v[m].clone() * &inv),
                        y: -(v[n].clone() * &inv),
                        z: v[j].clone() * &inv,
                    });
                }
            }
        }
    } else {
        let sides = [[x, y], [z, w]];
        for side in 0..2 {
            let [p, q] = &sides[side];
            let [s0, s1] = &sides[1 - side];
            for (one, zz) in [(s0, s1), (s1, s0)] {
                let inv = one.recip().expect("positive entries");
                for (a, b) in [(p, q), (q, p)] {
                    push(AffineCandidate { x: a.clone() * &inv, y: b.clone() * &inv, z: zz.clone() * &inv });
                }
            }
        }
    }
    Ok(out)
}

/// The regular `2k`-th power triple with `x = rs`, `y = rt`, `z = st`.
///
/// Needs `xy/z`, `xz/y`, `yz/x` all rational squares. Signs are normalized
/// to `r > 0`, `sgn s = sgn x`, `sgn t = sgn y`, which forces `st = z`.
/// Returns `None` when a square root is missing or the triple degenerates.
pub fn from_taxicab(x: &Rational, y: &Rational, z: &Rational, k: u32) -> Result<Option<RegularTriple<Rational>>> {
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::Precondition("x, y, z must be nonzero".into()));
    }
    let candidate = AffineCandidate { x: x.clone(), y: y.clone(), z: z.clone() };
    if !candidate.satisfies(k) {
        return Err(Error::Precondition(format!("{x}^{k} + {y}^{k} != {z}^{k} + 1")));
    }
    let root = |q: Rational| q.kth_root(2);
    let (Some(r), Some(s), Some(t)) =
        (root(x.clone() * y / z), root(x.clone() * z / y), root(y.clone() * z / x))
    else {
        return Ok(None);
    };
    let s = if x.is_negative() { -s } else { s };
    let t = if y.is_negative() { -t } else { t };
    debug_assert!(r.clone() * &s == *x && r.clone() * &t == *y && s.clone() * &t == *z);
    let triple = RegularTriple::from_rst(r, s, t, k);
    Ok(triple.is_valid().then_some(triple))
}

/// Every valid regular triple reached by [`from_taxicab`] from some
/// dehomogenization of the identity, deduplicated as sets.
pub fn taxicab_triples(hit: &TaxicabHit) -> Result<Vec<RegularTriple<Rational>>> {
    let [x, y, z, w] = hit.entries();
    let mut out: Vec<RegularTriple<Rational>> = Vec::new();
    for cand in dehomogenize(x, y, z, w, hit.k)? {
        let Some(triple) = from_taxicab(&cand.x, &cand.y, &cand.z, hit.k)? else { continue };
        let mut key = triple.elements();
        key.sort();
        if !out.iter().any(|t| {
            let mut other = t.elements();
            other.sort();
            other == key
        }) {
            out.push(triple);
        }
    }
    Ok(out)
}

/// `p^6 + h^3 m^6 = q^6 + h^3 n^6`, read off a cubic identity whose two sides
/// each contain a perfect square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticForm {
    pub p: u64,
    pub m: BigInt,
    pub q: u64,
    pub n: BigInt,
    pub h: Rational,
}

impl SexticForm {
    pub fn holds(&self) -> bool {
        let h3 = self.h.pow(3);
        let six = |v: &BigInt| Rational::from(v.pow(6));
        Rational::from(self.p).pow(6) + h3.clone() * six(&self.m) == Rational::from(self.q).pow(6) + h3 * six(&self.n)
    }
}

impl fmt::Display for SexticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^6 + ({})^3*{}^6 = {}^6 + ({})^3*{}^6", self.p, self.h, self.m, self.q, self.h, self.n)
    }
}

fn integer_sqrt(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// With `X = p^2` and `Z = q^2`, the remaining entries satisfy `Y = h m^2`,
/// `W = h n^2` exactly when `Y/W` is a rational square `(m/n)^2`; then
/// `h = Y/m^2`. Every choice of square entry on each side is tried.
pub fn sextic_form_check(hit: &TaxicabHit) -> Option<SexticForm> {
    if hit.k != 3 {
        return None;
    }
    let sides = [(hit.x, hit.y), (hit.y, hit.x)];
    let others = [(hit.z, hit.w), (hit.w, hit.z)];
    for (sq1, a) in sides {
        let Some(p) = integer_sqrt(sq1) else { continue };
        for (sq2, b) in others {
            let Some(q) = integer_sqrt(sq2) else { continue };
            let ratio = Rational::new(a, b).expect("positive");
            let Some(mn) = ratio.kth_root(2) else { continue };
            let (m, n) = (mn.numer().clone(), mn.denom().clone());
            let h = Rational::new(a, m.pow(2)).expect("nonzero");
            let form = SexticForm { p, m, q, n, h };
            debug_assert!(form.holds());
            return Some(form);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;

    use super::*;
    use crate::triple::verify_tuple;

    fn qq(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn hit_canonical_form() {
        let h = TaxicabHit::new((1587, 484), (1600, 243), 3).unwrap();
        assert_eq!(h.entries(), [243, 1600, 484, 1587]);
        assert!(h.square_product);
        assert_eq!(h.sqrt_witness, Some(621 * 40 * 22));
        assert!(h.recheck());
        let q = TaxicabHit::new((59, 158), (133, 134), 4).unwrap();
        assert!(!q.square_product);
        assert_eq!(q.sqrt_witness, None);
        assert!(TaxicabHit::new((1, 12), (1, 12), 3).is_err());
        assert!(TaxicabHit::new((1, 12), (9, 11), 3).is_err());
    }

    #[test]
    fn dehomogenizations_include_known_points() {
        let c = dehomogenize(243, 1600, 484, 1587, 3).unwrap();
        assert_eq!(c.len(), 24);
        assert!(c.contains(&AffineCandidate { x: qq(243, 1587), y: qq(1600, 1587), z: qq(484, 1587) }));
        let c = dehomogenize(78, 2809, 289, 2808, 3).unwrap();
        assert!(c.contains(&AffineCandidate { x: qq(78, 2808), y: qq(2809, 2808), z: qq(289, 2808) }));
        assert!(c.iter().all(|p| p.satisfies(3)));
        let c = dehomogenize(59, 158, 133, 134, 4).unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.iter().all(|p| p.satisfies(4)));
        assert!(dehomogenize(2, 5, 5, 2, 3).is_err());
    }

    #[test]
    fn triples_from_cubic_identities() {
        let t = from_taxicab(&qq(484, 243), &qq(529, 81), &qq(1600, 243), 3).unwrap().unwrap();
        assert_eq!(t.r, qq(253, 180));
        assert!(t.is_valid());
        assert!(verify_tuple(&t.elements(), 6).unwrap().is_verified());
        assert_eq!(t.r.clone() * &t.s, qq(484, 243));
        assert_eq!(t.s.clone() * &t.t, qq(1600, 243));
    }

    #[test]
    fn taxicab_degenerate_and_bad_inputs() {
        let one = Rational::one();
        assert_eq!(from_taxicab(&one, &one, &one, 3), Ok(None));
        assert!(matches!(from_taxicab(&one, &qq(2, 1), &one, 3), Err(Error::Precondition(_))));
        assert!(from_taxicab(&Rational::zero(), &one, &Rational::zero(), 3).is_err());
    }

    #[test]
    fn sextic_forms() {
        let f = sextic_form_check(&TaxicabHit::new((243, 1600), (484, 1587), 3).unwrap()).unwrap();
        assert_eq!((f.p, f.q, f.h.clone()), (40, 22, Rational::from(3)));
        assert_eq!((f.m.clone(), f.n.clone()), (9.into(), 23.into()));
        assert!(f.holds());
        let f = sextic_form_check(&TaxicabHit::new((78, 2809), (289, 2808), 3).unwrap()).unwrap();
        assert_eq!((f.p, f.q, f.h.clone()), (53, 17, Rational::from(78)));
        assert_eq!((f.m.clone(), f.n.clone()), (1.into(), 6.into()));
        assert_eq!(sextic_form_check(&TaxicabHit::new((1, 12), (9, 10), 3).unwrap()), None);
    }
}
