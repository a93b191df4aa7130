mod common;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistrim::presentation::{inverse, power};
use twistrim::{
    abelianization, alexander_polynomial, tietze_simplify, todd_coxeter, wirtinger_from_braid,
    AbelianInvariants, CosetStatus, GroupPresentation,
};

fn finite_groups() -> Vec<(GroupPresentation, usize)> {
    let tri = |l: i64, m: i64, n: i64| {
        GroupPresentation::new(2, vec![power(&[1], l), power(&[2], m), power(&[1, 2], n)]).unwrap()
    };
    vec![
        (tri(2, 2, 5), 10),
        (tri(2, 3, 3), 12),
        (tri(2, 3, 4), 24),
        (tri(2, 3, 5), 60),
        (GroupPresentation::new(1, vec![power(&[1], 7)]).unwrap(), 7),
        // Quaternion group.
        (
            GroupPresentation::new(
                2,
                vec![
                    power(&[1], 4),
                    [power(&[1], 2), power(&[2], -2)].concat(),
                    vec![2, 1, -2, 1],
                ],
            )
            .unwrap(),
            8,
        ),
        // Z/3 x Z/4.
        (
            GroupPresentation::new(2, vec![power(&[1], 3), power(&[2], 4), vec![1, 2, -1, -2]])
                .unwrap(),
            12,
        ),
    ]
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..5usize, 1..5usize).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
    })
}

fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_is_invariant(m in matrix(), seed in any::<u64>(), k in -3i64..=3) {
        let cols = m[0].len();
        let base = AbelianInvariants::from_relation_matrix(&big(&m), cols);
        for w in base.torsion.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(base.torsion.iter().all(|t| t > &BigInt::from(1)));

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut shuffled = m.clone();
        shuffled.shuffle(&mut rng);
        let mut perm: Vec<usize> = (0..cols).collect();
        perm.shuffle(&mut rng);
        for row in shuffled.iter_mut() {
            *row = perm.iter().map(|&j| row[j]).collect();
        }
        // Unimodular row and column operations.
        if shuffled.len() > 1 {
            let r0 = shuffled[0].clone();
            for (x, y) in shuffled[1].iter_mut().zip(&r0) {
                *x += k * y;
            }
        }
        if cols > 1 {
            for row in shuffled.iter_mut() {
                row[1] -= k * row[0];
            }
        }
        let moved = AbelianInvariants::from_relation_matrix(&big(&shuffled), cols);
        prop_assert_eq!(&moved, &base);

        if m.len() == cols {
            let det = rational_det(&big(&m));
            if det.is_zero() {
                prop_assert!(base.free_rank > 0);
            } else {
                prop_assert_eq!(base.order().unwrap(), det.magnitude().clone().into());
            }
        }
    }

    #[test]
    fn enumeration_ignores_relator_order(idx in 0usize..7, seed in any::<u64>(), flip in any::<bool>()) {
        let (p, order) = finite_groups().swap_remove(idx);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rels = p.relators.clone();
        rels.shuffle(&mut rng);
        if flip {
            rels = rels.iter().map(|w| inverse(w)).collect();
        }
        let q = GroupPresentation::new(p.num_generators(), rels).unwrap();
        prop_assert_eq!(todd_coxeter(&q, 100_000).status, CosetStatus::Complete(order));
    }

    #[test]
    fn tietze_preserves_invariants(b in knot_braids(8)) {
        let p = wirtinger_from_braid(&b).unwrap();
        let s = tietze_simplify(&p, 100_000);
        prop_assert!(s.num_generators() <= p.num_generators());
        prop_assert!(s.total_length() <= p.total_length());
        prop_assert_eq!(abelianization(&s), abelianization(&p));
        prop_assert_eq!(alexander_polynomial(&s).unwrap(), alexander_polynomial(&p).unwrap());
    }
}

#[test]
fn enumeration_after_tietze() {
    for (p, order) in finite_groups() {
        let s = tietze_simplify(&p, 100_000);
        assert_eq!(
            todd_coxeter(&s, 100_000).status,
            CosetStatus::Complete(order)
        );
        assert_eq!(abelianization(&s), abelianization(&p));
    }
}
