//! Regular quartic triples over `Q(i)` from the `alpha = 2` curve
//! `t^2 = (r+1)(r^2+2r-1)/4` with `s = r + 2`.

use alloc::vec::Vec;

use crate::curve::{CurveId, Point};
use crate::triple::{construct_regular, verify_tuple, RegularTriple};
use crate::{Error, Field, GaussianRational, Result};

/// Two known Gaussian-integer quartic triples, as `(re, im)` pairs.
pub const KNOWN_GAUSSIAN_TRIPLES: [[(i64, i64); 3]; 2] =
    [[(28, 4), (42, 24), (140, 52)], [(15, -10), (-15, -10), (0, 16)]];

pub fn known_triples() -> [[GaussianRational; 3]; 2] {
    KNOWN_GAUSSIAN_TRIPLES.map(|t| t.map(|(re, im)| GaussianRational::new(re, im)))
}

/// The triple, its conjugate, its negation and its conjugate negation.
pub fn symmetry_variants(triple: &[GaussianRational; 3]) -> [[GaussianRational; 3]; 4] {
    let conj = triple.clone().map(|z| z.conj());
    let neg = triple.clone().map(|z| -z);
    let conj_neg = conj.clone().map(|z| -z);
    [triple.clone(), conj, neg, conj_neg]
}

/// Whether each variant of `triple` is a quartic triple.
pub fn verify_with_symmetries(triple: &[GaussianRational; 3]) -> Result<[bool; 4]> {
    let mut out = [false; 4];
    for (slot, variant) in out.iter_mut().zip(symmetry_variants(triple)) {
        *slot = verify_tuple(&variant, 4)?.is_verified();
    }
    Ok(out)
}

fn same_set(x: &[GaussianRational; 3], y: &[GaussianRational; 3]) -> bool {
    x.iter().all(|e| y.contains(e)) && y.iter().all(|e| x.contains(e))
}

/// Index of the known triple that `triple` equals up to order, conjugation
/// and sign.
pub fn match_known(triple: &[GaussianRational; 3]) -> Option<usize> {
    known_triples().iter().position(|known| symmetry_variants(known).iter().any(|v| same_set(v, triple)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussianHit {
    pub r: GaussianRational,
    pub triple: RegularTriple<GaussianRational>,
}

impl GaussianHit {
    /// `(r, 2t)` on `y^2 = x^3 + 3x^2 + x - 1`.
    pub fn curve_point(&self) -> Point<GaussianRational> {
        let (x, y) = (self.triple.r.clone(), self.triple.t.clone());
        CurveId::Alpha2.scaling().to_model(x, y)
    }

    pub fn elements(&self) -> [GaussianRational; 3] {
        [self.triple.a.clone(), self.triple.b.clone(), self.triple.c.clone()]
    }
}

/// Every Gaussian integer `r` with `|re|, |im| <= bound` for which
/// `s = r + 2` gives a nondegenerate quartic triple. Ordered by `re`, then
/// `im`.
pub fn scan(bound: i64) -> Result<Vec<GaussianHit>> {
    if bound < 0 {
        return Err(Error::Precondition(alloc::format!("box must be nonnegative, got {bound}")));
    }
    let two = GaussianRational::from_i64(2);
    let mut hits = Vec::new();
    for re in -bound..=bound {
        for im in -bound..=bound {
            let r = GaussianRational::new(re, im);
            let s = r.clone() + &two;
            match construct_regular(&r, &s, 2) {
                Ok(Some(triple)) => hits.push(GaussianHit { r, triple }),
                Ok(None) | Err(Error::Precondition(_)) | Err(Error::Degenerate(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;

    use super::*;

    #[test]
    fn known_triples_and_variants_verify() {
        for t in known_triples() {
            assert_eq!(verify_with_symmetries(&t).unwrap(), [true; 4]);
        }
    }

    #[test]
    fn alpha2_relation() {
        let curve = CurveId::Alpha2.build::<GaussianRational>(&[]).unwrap();
        for hit in scan(3).unwrap() {
            assert!(curve.on_curve(&hit.curve_point()), "{}", hit.r);
        }
    }

    #[test]
    fn box_eight_finds_both() {
        let hits = scan(8).unwrap();
        let mut found = [false; 2];
        for h in &hits {
            if let Some(i) = match_known(&h.elements()) {
                found[i] = true;
            }
        }
        assert_eq!(found, [true, true]);
        let rs: Vec<_> = hits.iter().map(|h| h.r.clone()).collect();
        for (re, im) in [(6, 1), (6, -1), (-1, 4), (-1, -4)] {
            assert!(rs.contains(&GaussianRational::new(re, im)), "{re} {im}");
        }
    }
}
