use std::time::Instant;

use powtrip_core::curve::CurveId;
use powtrip_core::family::{family_rst, fam3_svalues, FamilyId};
use powtrip_core::pell::{er_torsion_points, pell_parametrize, pell_point, pell_torsion_images};
use powtrip_core::{Field, RatFunc};

#[test]
fn torsion_points_lie_on_er_with_expected_orders() {
    let r = RatFunc::var();
    let curve = CurveId::Er.build(std::slice::from_ref(&r)).unwrap();
    let points = er_torsion_points(&r);
    let orders: Vec<u32> = points.iter().map(|(p, _)| curve.torsion_order(p, 12).unwrap().unwrap()).collect();
    assert_eq!(orders, [1, 2, 2, 2, 4, 4, 4, 4]);
    for (p, order) in &points {
        assert!(curve.on_curve(p));
        if *order == 4 {
            let d = curve.double(p).unwrap();
            assert_eq!(curve.torsion_order(&d, 12).unwrap(), Some(2));
        }
    }
}

#[test]
fn torsion_translates_of_pell_point() {
    let u = RatFunc::var();
    let list = fam3_svalues(&u).unwrap();
    let images = pell_torsion_images(&u).unwrap();
    assert_eq!(images.len(), 8);
    assert_eq!(images[0].order, 1);
    let s = images[0].s.clone();
    let t = images[0].t_squared.sqrt().unwrap();
    assert!(list.contains(&t));
    let (_, s3a, t3a) = family_rst(FamilyId::Fam3a, std::slice::from_ref(&u)).unwrap();
    assert!(images.iter().any(|i| i.s == s3a && i.t_squared == t3a.square()));
    let inv = |x: &RatFunc| x.recip().unwrap();
    for img in &images {
        assert!(list.contains(&img.s), "s' = {} not listed", img.s);
        let (base_s, base_t) = if img.order == 4 { (&t, &s) } else { (&s, &t) };
        let orbit = [base_s.clone(), -base_s.clone(), inv(base_s), -inv(base_s)];
        assert!(orbit.contains(&img.s), "order {}: s' = {}", img.order, img.s);
        let t_new = img.t_squared.sqrt().expect("t'^2 is a square");
        let t_orbit = [base_t.clone(), -base_t.clone(), inv(base_t), -inv(base_t)];
        assert!(t_orbit.contains(&t_new) || t_orbit.contains(&-t_new.clone()), "order {}: t' = {t_new}", img.order);
    }
    let found: Vec<bool> = list.iter().map(|v| images.iter().any(|i| i.s == *v)).collect();
    assert_eq!(found, [true; 8]);
}

#[test]
fn pell_point_is_not_torsion_up_to_12() {
    let u = RatFunc::var();
    let (r, p) = pell_parametrize(&u).unwrap();
    let curve = CurveId::Er.build(std::slice::from_ref(&r)).unwrap();
    let point = pell_point(&r, &p);
    assert!(curve.on_curve(&point));
    let start = Instant::now();
    assert_eq!(curve.torsion_order(&point, 12).unwrap(), None);
    eprintln!("pell point torsion check over Q(u): {:?}", start.elapsed());
}
