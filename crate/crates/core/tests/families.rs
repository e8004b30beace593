use powtrip_core::family::{
    family_point, family_rs, family_triple, fam3_svalues, positivity_classify, printed_abc, FamilyId,
};
use powtrip_core::arith::Sign;
use powtrip_core::triple::{regularity_defect, verify_tuple};
use powtrip_core::{Error, Rational};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn check_member(id: FamilyId, params: &[Rational]) -> Result<(), TestCaseError> {
    match family_triple(id, params) {
        Ok(t) => {
            let [a, b, c] = t.elements();
            prop_assert!(regularity_defect(&a, &b, &c).is_zero());
            prop_assert!(verify_tuple(&[a, b, c], 4).unwrap().is_verified(), "{id} {params:?}");
        }
        Err(Error::ExcludedParameter(_)) | Err(Error::Degenerate(_)) => {}
        Err(e) => return Err(TestCaseError::fail(format!("{id} {params:?}: {e}"))),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn one_parameter_families_verify(u in small_rational()) {
        for id in [FamilyId::Fam1, FamilyId::Fam2, FamilyId::Fam3a, FamilyId::Fam3b, FamilyId::Fam4] {
            check_member(id, std::slice::from_ref(&u))?;
        }
    }

    #[test]
    fn fam2k_verifies_and_matches_fam2(k in small_rational(), u in small_rational()) {
        check_member(FamilyId::Fam2k, &[k.clone(), u.clone()])?;
        if let Ok(t) = family_triple(FamilyId::Fam2k, &[k.clone(), u.clone()]) {
            let ku2 = k * &u * &u;
            let alpha = (ku2.clone() + Rational::one()) / (ku2 - Rational::one());
            let t2 = family_triple(FamilyId::Fam2, &[alpha]).unwrap();
            prop_assert_eq!(t.elements(), t2.elements());
        }
    }

    #[test]
    fn fam3_pair_shares_r_and_reciprocates_s(u in small_rational()) {
        let params = std::slice::from_ref(&u);
        if let (Ok((ra, sa)), Ok((rb, sb))) = (family_rs(FamilyId::Fam3a, params), family_rs(FamilyId::Fam3b, params)) {
            prop_assert_eq!(ra, rb);
            prop_assert_eq!(sa.recip().unwrap(), sb);
        }
    }

    #[test]
    fn fam3b_b_is_negative(u in small_rational()) {
        if let Ok(t) = family_triple(FamilyId::Fam3b, std::slice::from_ref(&u)) {
            prop_assert!(t.b.is_negative(), "u = {u}, b = {}", t.b);
        }
    }

    #[test]
    fn negation_closure(u in small_rational()) {
        if let Ok(t) = family_triple(FamilyId::Fam1, std::slice::from_ref(&u)) {
            prop_assert!(verify_tuple(&t.negated(), 4).unwrap().is_verified());
        }
    }
}

#[test]
fn fam1_positive_for_shifted_integers() {
    for n in 0..100 {
        let report = positivity_classify(&Rational::from(n + 3)).unwrap();
        assert!(report.all_positive(), "u = {}", n + 3);
        assert_eq!(report.octic_factor, Sign::Positive);
    }
}

#[test]
fn fam1_sign_classification() {
    for u in [q(3, 1), q(4, 1), q(5, 2), q(10, 1), q(-3, 1)] {
        assert!(positivity_classify(&u).unwrap().all_positive(), "u = {u}");
    }
    for u in [q(1, 2), q(2, 1), q(-2, 1)] {
        let s = positivity_classify(&u).unwrap();
        assert_eq!((s.a, s.b, s.c), (Sign::Positive, Sign::Negative, Sign::Positive), "u = {u}");
    }
}

/// The octic factor changes sign near 0.4354 and 2.2967, and is positive
/// beyond them.
#[test]
fn octic_factor_interval_cross_check() {
    let sign = |n: i64, d: i64| positivity_classify(&q(n, d)).unwrap().octic_factor;
    assert_eq!(sign(4353, 10000), Sign::Positive);
    assert_eq!(sign(4355, 10000), Sign::Negative);
    assert_eq!(sign(22966, 10000), Sign::Negative);
    assert_eq!(sign(22968, 10000), Sign::Positive);
    assert_eq!(sign(-22968, 10000), Sign::Positive);
}

#[test]
fn fam1_printed_example() {
    let t = family_point(FamilyId::Fam1, &[Rational::from(3)]).unwrap().triple;
    assert_eq!(t.elements(), [q(1681, 1600), q(8063044, 3404025), q(62349625, 8714304)]);
    let printed = printed_abc(FamilyId::Fam1, &[Rational::from(3)]).unwrap().unwrap();
    assert_eq!(printed, t.elements());
}

#[test]
fn fam3a_square_r_example() {
    let t = family_triple(FamilyId::Fam3a, &[Rational::from(-2)]).unwrap();
    assert_eq!(t.r, Rational::from(4));
    assert_eq!(t.elements(), [q(240, 49), q(833, 16), q(69745, 784)]);
}

#[test]
fn fam3_t_is_listed() {
    for u in [q(2, 1), q(5, 1), q(-7, 3), q(1, 2)] {
        for id in [FamilyId::Fam3a, FamilyId::Fam3b] {
            let t = family_triple(id, std::slice::from_ref(&u)).unwrap();
            let list = fam3_svalues(&u).unwrap();
            assert!(list.contains(&t.s) && list.contains(&t.t), "{id} u = {u}");
        }
    }
}

#[test]
fn excluded_parameters() {
    for u in [0, 1, -1] {
        assert!(matches!(family_triple(FamilyId::Fam1, &[Rational::from(u)]), Err(Error::ExcludedParameter(_))));
    }
    for u in [3, -3] {
        assert!(matches!(family_triple(FamilyId::Fam3a, &[Rational::from(u)]), Err(Error::ExcludedParameter(_))));
    }
}
