//! Helpers shared by the integration tests. The oracles here deliberately
//! avoid the library's own polynomial and matrix code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use twistrim::{alexander_polynomial, knot_group, Braid, GroupPresentation, KnotExpr, LaurentPoly};

/// Figure-eight knot in KnotTheory PD notation.
pub const FIGURE_EIGHT_PD: &str = "pd((4,2,5,1),(8,6,1,5),(6,3,7,4),(2,7,3,8))";
/// Trefoil in KnotTheory PD notation.
pub const TREFOIL_PD: &str = "pd((1,4,2,5),(3,6,4,1),(5,2,6,3))";
pub const TREFOIL: &str = "braid(2; 1 1 1)";
pub const FIGURE_EIGHT: &str = "braid(3; 1 -2 1 -2)";

pub fn knot(text: &str) -> KnotExpr {
    twistrim::parse_knot(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn group(text: &str) -> GroupPresentation {
    knot_group(&knot(text)).unwrap()
}

pub fn delta(text: &str) -> LaurentPoly {
    alexander_polynomial(&group(text)).unwrap()
}

pub fn poly(coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(0, coeffs)
}

/// Determinant by Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn rational_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// `∏ Δ(ζ^i)` over the `d`-th roots of unity, as the determinant of the
/// circulant matrix of `Δ mod (t^d - 1)`.
pub fn circulant_product(delta: &LaurentPoly, d: usize) -> BigInt {
    let mut c = vec![BigInt::zero(); d];
    for (k, v) in delta.coeffs().iter().enumerate() {
        let e = (delta.min_exp() + k as i64).rem_euclid(d as i64) as usize;
        c[e] += v;
    }
    let m: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| c[(j + d - i) % d].clone()).collect())
        .collect();
    rational_det(&m)
}

/// Fox derivative `∂w/∂g_i` evaluated at an integer `t`, computed directly
/// from the product rule. Returns numerator and the power of `t` it must be
/// divided by when `t` appears with negative exponents.
fn fox_at(w: &[i32], i: usize, t: &BigInt) -> (BigInt, u32) {
    // Shift all exponents up by the word length so every power is nonnegative.
    let shift = w.len() as i64;
    let mut acc = BigInt::zero();
    let mut e: i64 = 0;
    for &x in w {
        if x.unsigned_abs() as usize == i {
            if x > 0 {
                acc += t.pow((e + shift) as u32);
            } else {
                acc -= t.pow((e - 1 + shift) as u32);
            }
        }
        e += x.signum() as i64;
    }
    (acc, shift as u32)
}

/// `|Δ(t)|` up to a power of `t`, from a Wirtinger-style presentation with
/// one row and the meridian column deleted. Returns `det * t^k` for some `k`.
pub fn fox_minor_at(p: &GroupPresentation, t: i64, drop_row: usize) -> BigInt {
    let t = BigInt::from(t);
    let n = p.num_generators();
    let rows: Vec<&Vec<i32>> = p
        .relators
        .iter()
        .enumerate()
        .filter(|(r, _)| *r != drop_row)
        .map(|(_, w)| w)
        .collect();
    assert_eq!(rows.len(), n - 1, "need a square minor");
    let m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|w| {
            (1..=n)
                .filter(|&i| i != p.meridian)
                .map(|i| fox_at(w, i, &t).0)
                .collect()
        })
        .collect();
    rational_det(&m)
}

/// Strips all factors of `t` (and the sign) from an integer.
pub fn strip_powers(mut v: BigInt, t: i64) -> BigInt {
    let t = BigInt::from(t);
    v = v.abs();
    if v.is_zero() || t.abs().is_one() {
        return v;
    }
    while (&v % &t).is_zero() {
        v /= &t;
    }
    v.abs()
}

/// Random braid on 2..=4 strands with at most `max_crossings` letters whose
/// closure is a knot. Letters joining two closure components are appended
/// until one component remains.
pub fn random_knot_braid<R: Rng>(rng: &mut R, max_crossings: usize) -> Braid {
    let strands = rng.gen_range(2..=4usize);
    let budget = max_crossings - (strands - 1);
    let len = rng.gen_range(0..=budget);
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    close_up(strands, word, |_| true)
}

/// Appends `σ_i^{±1}` letters until the closure has one component.
pub fn close_up(
    strands: usize,
    mut word: Vec<i32>,
    mut positive: impl FnMut(usize) -> bool,
) -> Braid {
    loop {
        let b = Braid::new(strands, word.clone()).unwrap();
        if b.closure_components() == 1 {
            return b;
        }
        let before = b.closure_components();
        let i = (1..strands)
            .find(|&i| {
                let mut w = word.clone();
                w.push(i as i32);
                Braid::new(strands, w).unwrap().closure_components() < before
            })
            .expect("an adjacent transposition merges two cycles");
        word.push(if positive(i) { i as i32 } else { -(i as i32) });
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Knots with at most eight crossings used by the sweep tests.
pub const CORPUS: &[&str] = &[
    "unknot",
    TREFOIL,
    FIGURE_EIGHT,
    "mirror(braid(2; 1 1 1))",
    "braid(2; 1 1 1 1 1)",
    "braid(3; 1 1 1 2 -1 2)",
    "braid(4; 1 1 2 -1 -3 2 -3)",
    "braid(3; 1 1 1 -2 1 -2)",
    "braid(3; 1 1 -2 1 -2 -2)",
    "braid(2; 1 1 1 1 1 1 1)",
    "T(3,4)",
    TREFOIL_PD,
    FIGURE_EIGHT_PD,
];

/// Proptest strategy: braids with at most `max_crossings` letters whose
/// closure is a knot.
pub fn knot_braids(max_crossings: usize) -> impl proptest::strategy::Strategy<Value = Braid> {
    use proptest::prelude::*;
    (2..=4usize)
        .prop_flat_map(move |n| {
            let len = max_crossings - (n - 1);
            (
                Just(n),
                proptest::collection::vec((1..n as i32, any::<bool>()), 0..=len),
                any::<u8>(),
            )
        })
        .prop_map(|(n, letters, signs)| {
            let word = letters
                .into_iter()
                .map(|(g, pos)| if pos { g } else { -g })
                .collect();
            close_up(n, word, |i| (signs >> (i % 8)) & 1 == 1)
        })
}
