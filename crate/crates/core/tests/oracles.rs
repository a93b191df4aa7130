//! Library results checked against independently computed values.

mod common;

use common::*;
use num_bigint::BigInt;
use twistrim::presentation::power;
use twistrim::{
    abelianization, branched_cover_order, branched_cover_structure, resultant_with_cyclotomic,
    todd_coxeter, torus_alexander, CosetStatus, CoverOrder, GroupPresentation, LaurentPoly,
};

#[test]
fn table_alexander_polynomials() {
    // Standard knot-table values; Δ is normalized with positive leading term.
    let cases: &[(&str, &[i64])] = &[
        (TREFOIL, &[1, -1, 1]),
        (TREFOIL_PD, &[1, -1, 1]),
        (FIGURE_EIGHT, &[1, -3, 1]),
        (FIGURE_EIGHT_PD, &[1, -3, 1]),
        ("braid(2; 1 1 1 1 1)", &[1, -1, 1, -1, 1]),
        ("braid(3; 1 1 1 2 -1 2)", &[2, -3, 2]),
        ("braid(4; 1 1 2 -1 -3 2 -3)", &[2, -5, 2]),
        ("braid(3; 1 1 1 -2 1 -2)", &[1, -3, 3, -3, 1]),
        ("braid(3; 1 1 -2 1 -2 -2)", &[1, -3, 5, -3, 1]),
        ("T(3,4)", &[1, -1, 0, 1, 0, -1, 1]),
        ("unknot", &[1]),
        ("braid(3; 1 2)", &[1]),
    ];
    for (text, coeffs) in cases {
        assert_eq!(delta(text), poly(coeffs), "{text}");
    }
}

#[test]
fn pd_and_braid_groups_agree() {
    for (a, b) in [(TREFOIL, TREFOIL_PD), (FIGURE_EIGHT, FIGURE_EIGHT_PD)] {
        assert_eq!(abelianization(&group(a)), abelianization(&group(b)));
        for d in 2..6 {
            assert_eq!(
                branched_cover_structure(&group(a), d).unwrap(),
                branched_cover_structure(&group(b), d).unwrap(),
                "{a} d={d}"
            );
        }
    }
}

#[test]
fn fox_minor_evaluations() {
    // Δ(t) up to ±t^k, evaluated by an independent numeric Fox calculus.
    let knots = [
        TREFOIL,
        FIGURE_EIGHT,
        TREFOIL_PD,
        FIGURE_EIGHT_PD,
        "T(2,5)",
        "T(3,4)",
        "T(3,5)",
        "braid(3; 1 1 1 2 -1 2)",
        "braid(4; 1 1 2 -1 -3 2 -3)",
        "mirror(braid(3; 1 1 -2 1 -2 -2))",
    ];
    for text in knots {
        let p = group(text);
        let d = delta(text);
        for t in [-3i64, -1, 2, 3, 5] {
            let lib = strip_powers(d.eval_i64(t), t);
            for row in 0..p.relators.len() {
                let oracle = strip_powers(fox_minor_at(&p, t, row), t);
                assert_eq!(lib, oracle, "{text} t={t} row={row}");
            }
        }
    }
}

#[test]
fn resultant_matches_circulant() {
    let polys = [
        poly(&[1, -1, 1]),
        poly(&[1, -3, 1]),
        poly(&[2, -3, 2]),
        poly(&[1, -1, 0, 1, 0, -1, 1]),
        poly(&[1, -2, 3, -2, 1]),
        poly(&[3]),
        LaurentPoly::from_i64s(-2, &[1, 0, -5, 0, 1]),
    ];
    for p in &polys {
        for d in 1..=12usize {
            let res = resultant_with_cyclotomic(p, d as i64).unwrap();
            let circ = circulant_product(p, d);
            assert_eq!(res.magnitude(), circ.magnitude(), "{p} d={d}");
            let order = branched_cover_order(p, d as i64).unwrap();
            if circ == BigInt::from(0) {
                assert_eq!(order, CoverOrder::Infinite);
            } else {
                assert_eq!(order, CoverOrder::Finite(circ.magnitude().clone().into()));
            }
        }
    }
}

#[test]
fn two_fold_cover_is_determinant() {
    // |H_1| of the double branched cover is |Δ(-1)|.
    for text in [
        TREFOIL,
        FIGURE_EIGHT,
        "T(2,5)",
        "T(3,4)",
        "braid(3; 1 1 1 2 -1 2)",
    ] {
        let d = delta(text);
        let want = d.eval_i64(-1).magnitude().clone();
        let got = branched_cover_structure(&group(text), 2)
            .unwrap()
            .order()
            .unwrap();
        assert_eq!(got.magnitude(), &want, "{text}");
    }
}

#[test]
fn torus_formula_against_fox() {
    for q in 2..=9u32 {
        for p in 2..q {
            if gcd(p as u64, q as u64) != 1 {
                continue;
            }
            let formula = torus_alexander(p, q).unwrap();
            assert_eq!(formula, delta(&format!("T({p},{q})")), "T({p},{q})");
            // (1-t)(1-t^pq) = Δ (1-t^p)(1-t^q), checked by evaluation.
            for t in [2i64, 3, -2] {
                let tb = BigInt::from(t);
                let lhs = (1 - &tb) * (1 - tb.pow(p * q));
                let rhs = formula.eval_i64(t) * (1 - tb.pow(p)) * (1 - tb.pow(q));
                assert_eq!(lhs, rhs, "T({p},{q}) t={t}");
            }
        }
    }
}

fn triangle(l: i64, m: i64, n: i64) -> GroupPresentation {
    let ab = [1, 2];
    GroupPresentation::new(2, vec![power(&[1], l), power(&[2], m), power(&ab, n)]).unwrap()
}

#[test]
fn triangle_group_orders() {
    // ⟨a,b | a^l, b^m, (ab)^n⟩ is finite of order 2/(1/l+1/m+1/n-1) when the
    // reciprocal sum exceeds 1.
    let cases = [
        (2, 2, 3),
        (2, 2, 7),
        (2, 3, 3),
        (2, 3, 4),
        (2, 3, 5),
        (3, 3, 2),
        (2, 5, 3),
    ];
    for (l, m, n) in cases {
        let num = 2 * l * m * n;
        let den = m * n + l * n + l * m - l * m * n;
        let want = (num / den) as usize;
        let table = todd_coxeter(&triangle(l, m, n), 100_000);
        assert_eq!(table.status, CosetStatus::Complete(want), "({l},{m},{n})");
        for c in 0..want {
            for w in &triangle(l, m, n).relators {
                assert_eq!(table.act_word(c, w), c);
            }
        }
    }
    assert_eq!(
        todd_coxeter(&triangle(2, 3, 7), 20_000).status,
        CosetStatus::Exhausted
    );
}

#[test]
fn psl27_order() {
    let a = [1];
    let b = [2];
    let ab = [1, 2];
    let comm = [1, 2, -1, -2];
    let p = GroupPresentation::new(
        2,
        vec![power(&a, 2), power(&b, 3), power(&ab, 7), power(&comm, 4)],
    )
    .unwrap();
    assert_eq!(todd_coxeter(&p, 100_000).status, CosetStatus::Complete(168));
}
