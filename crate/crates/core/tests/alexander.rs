mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use twistrim::alexander::alexander_minor;
use twistrim::{
    alexander_polynomial, mirror_braid, presentation_connected_sum, resultant_with_cyclotomic,
    wirtinger_from_braid, LaurentPoly,
};

fn delta_of(b: &twistrim::Braid) -> LaurentPoly {
    alexander_polynomial(&wirtinger_from_braid(b).unwrap()).unwrap()
}

fn is_unit_at_one(d: &LaurentPoly) -> bool {
    let v = d.eval_i64(1);
    v == BigInt::from(1) || v == BigInt::from(-1)
}

#[test]
fn corpus_sum_multiplicativity() {
    for a in CORPUS {
        for b in CORPUS {
            let p = presentation_connected_sum(&group(a), &group(b));
            let got = alexander_polynomial(&p).unwrap();
            let want = &delta(a) * &delta(b);
            assert!(got.eq_up_to_units(&want), "{a} # {b}: {got} vs {want}");
        }
    }
}

#[test]
fn all_minors_small_corpus() {
    for text in CORPUS.iter().filter(|t| !t.contains("T(3,4)")) {
        let p = group(text);
        let d = delta(text);
        for row in 0..p.relators.len() {
            for col in 0..p.num_generators() {
                let m = alexander_minor(&p, row, col);
                assert!(m.eq_up_to_units(&d), "{text} row={row} col={col}: {m}");
            }
        }
    }
}

#[test]
fn resultant_at_rational_roots() {
    for text in CORPUS {
        let d = delta(text);
        let r1 = resultant_with_cyclotomic(&d, 1).unwrap();
        assert_eq!(r1.magnitude(), d.eval_i64(1).magnitude(), "{text}");
        let r2 = resultant_with_cyclotomic(&d, 2).unwrap();
        let prod = d.eval_i64(1) * d.eval_i64(-1);
        assert_eq!(r2.magnitude(), prod.magnitude(), "{text}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn value_at_one_is_unit(b in knot_braids(8)) {
        prop_assert!(is_unit_at_one(&delta_of(&b)));
    }

    #[test]
    fn symmetric(b in knot_braids(8)) {
        let d = delta_of(&b);
        prop_assert!(d.eq_up_to_units(&d.reciprocal()));
        prop_assert!(d.is_normalized());
    }

    #[test]
    fn mirror_reciprocates(b in knot_braids(8)) {
        let d = delta_of(&b);
        let m = delta_of(&mirror_braid(&b));
        prop_assert!(m.eq_up_to_units(&d.reciprocal()));
        for k in 1..=6 {
            let r1 = resultant_with_cyclotomic(&d, k).unwrap();
            let r2 = resultant_with_cyclotomic(&m, k).unwrap();
            prop_assert_eq!(r1.magnitude(), r2.magnitude());
        }
    }

    #[test]
    fn connected_sum_multiplies(a in knot_braids(6), b in knot_braids(6)) {
        let p = presentation_connected_sum(
            &wirtinger_from_braid(&a).unwrap(),
            &wirtinger_from_braid(&b).unwrap(),
        );
        let got = alexander_polynomial(&p).unwrap();
        prop_assert!(got.eq_up_to_units(&(&delta_of(&a) * &delta_of(&b))));
    }

    #[test]
    fn minors_agree(b in knot_braids(6)) {
        let p = wirtinger_from_braid(&b).unwrap();
        let d = delta_of(&b);
        for row in 0..p.relators.len() {
            for col in 0..p.num_generators() {
                prop_assert!(alexander_minor(&p, row, col).eq_up_to_units(&d));
            }
        }
    }
}
