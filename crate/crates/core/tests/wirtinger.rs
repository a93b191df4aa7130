mod common;

use common::*;
use proptest::prelude::*;
use twistrim::presentation::power;
use twistrim::{
    abelianization, alexander_polynomial, knot_group, todd_coxeter, wirtinger_from_braid,
    CosetStatus, GroupPresentation, KnotExpr,
};

fn is_z(p: &GroupPresentation) -> bool {
    let ab = abelianization(p);
    ab.free_rank == 1 && ab.torsion.is_empty()
}

/// The knot group with `μ²` added, minus relator `skip` (if any).
fn quotient_by_meridian_square(p: &GroupPresentation, skip: Option<usize>) -> GroupPresentation {
    let mut rels: Vec<_> = p
        .relators
        .iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != skip)
        .map(|(_, w)| w.clone())
        .collect();
    rels.push(power(&[p.meridian as i32], 2));
    GroupPresentation::with_meridian(p.num_generators(), rels, p.meridian).unwrap()
}

#[test]
fn golden_presentations() {
    for (text, file) in [
        (TREFOIL, include_str!("golden/trefoil_presentation.json")),
        (
            FIGURE_EIGHT,
            include_str!("golden/figure_eight_presentation.json"),
        ),
    ] {
        let p = group(text);
        assert_eq!(p.to_json(), file.trim(), "{text}");
        assert_eq!(GroupPresentation::from_json(file).unwrap(), p);
    }
}

#[test]
fn corpus_abelianizes_to_z() {
    for text in CORPUS {
        assert!(is_z(&group(text)), "{text}");
    }
    let sum = knot("T(2,3)#mirror(T(3,4))#braid(3; 1 -2 1 -2)");
    assert!(is_z(&knot_group(&sum).unwrap()));
}

#[test]
fn any_relator_is_redundant() {
    // Quotients by μ² are dihedral for two-bridge knots: order 2·|Δ(-1)|.
    for (text, order) in [
        (TREFOIL, 6),
        (FIGURE_EIGHT, 10),
        ("braid(2; 1 1 1 1 1)", 10),
        (TREFOIL_PD, 6),
    ] {
        let p = group(text);
        let full = todd_coxeter(&quotient_by_meridian_square(&p, None), 100_000).status;
        assert_eq!(full, CosetStatus::Complete(order), "{text}");
        for i in 0..p.relators.len() {
            let q = todd_coxeter(&quotient_by_meridian_square(&p, Some(i)), 100_000).status;
            assert_eq!(q, full, "{text} without relator {i}");
        }
    }
}

#[test]
fn unknot_group_is_free_cyclic() {
    let p = knot_group(&KnotExpr::Unknot).unwrap();
    assert!(is_z(&p));
    assert!(alexander_polynomial(&p).unwrap().is_one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn braid_groups_abelianize_to_z(b in knot_braids(8)) {
        prop_assert!(is_z(&wirtinger_from_braid(&b).unwrap()));
    }

    #[test]
    fn relator_deletion_keeps_mu_square_quotient(b in knot_braids(6)) {
        let p = wirtinger_from_braid(&b).unwrap();
        let full = todd_coxeter(&quotient_by_meridian_square(&p, None), 50_000).status;
        if let CosetStatus::Complete(_) = full {
            for i in 0..p.relators.len() {
                let q = todd_coxeter(&quotient_by_meridian_square(&p, Some(i)), 50_000).status;
                prop_assert_eq!(q, full);
            }
        }
    }

    #[test]
    fn meridian_choice_is_irrelevant(b in knot_braids(8)) {
        let p = wirtinger_from_braid(&b).unwrap();
        let base = alexander_polynomial(&p).unwrap();
        for j in 1..=p.num_generators() {
            let q = GroupPresentation::with_meridian(p.num_generators(), p.relators.clone(), j).unwrap();
            prop_assert!(alexander_polynomial(&q).unwrap().eq_up_to_units(&base));
        }
    }
}
