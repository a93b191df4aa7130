//! First homology of cyclic branched covers of knots.
//!
//! The order comes from the resultant `Res(t^d - 1, Δ)`; the group structure
//! comes independently from the reduced Alexander matrix evaluated at the
//! companion matrix of `1 + t + ... + t^(d-1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::alexander::{check_knot_group, reduced_alexander_matrix, resultant_with_cyclotomic};
use crate::error::{Error, Result};
use crate::matrix::AbelianInvariants;
use crate::poly::LaurentPoly;
use crate::presentation::GroupPresentation;

/// `|H_1|` of a branched cover: a positive integer or infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoverOrder {
    Finite(BigInt),
    Infinite,
}

impl CoverOrder {
    pub fn is_one(&self) -> bool {
        matches!(self, CoverOrder::Finite(n) if n.is_one())
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            CoverOrder::Finite(n) => Some(n),
            CoverOrder::Infinite => None,
        }
    }
}

impl fmt::Display for CoverOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverOrder::Finite(n) => write!(f, "{n}"),
            CoverOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// Serialized as a JSON number when it fits in 64 bits, a decimal string when
/// larger, and the string `"infinite"` otherwise.
impl Serialize for CoverOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoverOrder::Finite(n) => match u64::try_from(n) {
                Ok(v) => s.serialize_u64(v),
                Err(_) => s.serialize_str(&n.to_string()),
            },
            CoverOrder::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for CoverOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(n) => Ok(CoverOrder::Finite(BigInt::from(n))),
            Repr::Text(t) if t == "infinite" => Ok(CoverOrder::Infinite),
            Repr::Text(t) => t
                .parse::<BigInt>()
                .map(CoverOrder::Finite)
                .map_err(serde::de::Error::custom),
        }
    }
}

/// Homology of the `d`-fold cyclic branched cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverHomology {
    pub d: u64,
    pub order: CoverOrder,
    pub structure: Option<AbelianInvariants>,
}

/// `|H_1|` of the `d`-fold branched cover via the product of `Δ` over the
/// `d`-th roots of unity.
pub fn branched_cover_order(delta: &LaurentPoly, d: i64) -> Result<CoverOrder> {
    let r = resultant_with_cyclotomic(delta, d)?;
    Ok(if r.is_zero() {
        CoverOrder::Infinite
    } else {
        CoverOrder::Finite(r.abs())
    })
}

/// Companion matrix of `1 + t + ... + t^(d-1)`, size `d - 1`.
pub fn companion_matrix(d: usize) -> Vec<Vec<BigInt>> {
    let n = d.saturating_sub(1);
    let mut c = vec![vec![BigInt::zero(); n]; n];
    for i in 1..n {
        c[i][i - 1] = BigInt::one();
    }
    for row in c.iter_mut() {
        row[n - 1] = -BigInt::one();
    }
    c
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// `H_1` of the `d`-fold branched cover from the reduced Alexander matrix with
/// `t` replaced by the companion matrix `C`. Since `C^d = 1`, `t^k` becomes
/// `C^(k mod d)`. All relator rows are kept; the redundant one contributes
/// nothing to the cokernel.
pub fn branched_cover_structure(p: &GroupPresentation, d: i64) -> Result<AbelianInvariants> {
    if d < 1 {
        return Err(Error::BadDegree(d));
    }
    check_knot_group(p)?;
    let d = d as usize;
    let n = d - 1;
    let a = reduced_alexander_matrix(p);
    if n == 0 || a.cols == 0 {
        return Ok(AbelianInvariants::trivial());
    }
    let c = companion_matrix(d);
    let mut powers = Vec::with_capacity(d);
    let mut identity = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in identity.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    powers.push(identity);
    for k in 1..d {
        let next = mat_mul(&powers[k - 1], &c);
        powers.push(next);
    }
    let rows = a.rows * n;
    let cols = a.cols * n;
    let mut big = vec![vec![BigInt::zero(); cols]; rows];
    for (i, row) in a.entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            for (k, coeff) in e.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let exp = (e.min_exp() + k as i64).rem_euclid(d as i64) as usize;
                for (r, prow) in powers[exp].iter().enumerate() {
                    for (s, v) in prow.iter().enumerate() {
                        if !v.is_zero() {
                            big[i * n + r][j * n + s] += coeff * v;
                        }
                    }
                }
            }
        }
    }
    Ok(AbelianInvariants::from_relation_matrix(&big, cols))
}

/// Both routes at once.
pub fn cover_homology(
    p: &GroupPresentation,
    delta: &LaurentPoly,
    d: i64,
    with_structure: bool,
) -> Result<CoverHomology> {
    let order = branched_cover_order(delta, d)?;
    let structure = if with_structure {
        Some(branched_cover_structure(p, d)?)
    } else {
        None
    };
    Ok(CoverHomology {
        d: d as u64,
        order,
        structure,
    })
}

/// Whether the `d`-fold unbranched cyclic cover of the knot exterior has
/// `H_1 ≅ Z`. Uses `H_1(unbranched) ≅ Z ⊕ H_1(branched)`, so this holds iff
/// the branched cover is a homology sphere.
pub fn unbranched_cover_is_homology_circle(delta: &LaurentPoly, d: i64) -> Result<bool> {
    Ok(branched_cover_order(delta, d)?.is_one())
}
