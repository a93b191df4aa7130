//! Exact linear algebra: fraction-free determinants over integral domains and
//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::LaurentPoly;

/// An integral domain in which exact division can be carried out.
pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, where the caller guarantees that the division is exact.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
}

impl ExactRing for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self.exact_div(rhs)
            .expect("Bareiss step produced an inexact polynomial division")
    }
}

/// Determinant of a square matrix by Bareiss fraction-free elimination.
///
/// Every intermediate quotient is exact, so no fractions appear. Rows are
/// swapped when a pivot vanishes. Panics if the matrix is not square.
pub fn bareiss_determinant<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix is not square");
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with
/// `1 < t_1 | t_2 | ... | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    #[serde(with = "bigint_list")]
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| {
            self.torsion
                .iter()
                .fold(<BigInt as One>::one(), |a, b| a * b)
        })
    }

    pub fn is_cyclic_of_order(&self, d: u64) -> bool {
        if self.free_rank != 0 {
            return false;
        }
        if d == 1 {
            self.torsion.is_empty()
        } else {
            self.torsion == [BigInt::from(d)]
        }
    }

    /// Cokernel of an integer relation matrix with `cols` generators.
    pub fn from_relation_matrix(rows: &[Vec<BigInt>], cols: usize) -> Self {
        let diag = smith_diagonal(rows.to_vec(), cols);
        let nonzero: Vec<BigInt> = diag.into_iter().filter(|d| !Zero::is_zero(d)).collect();
        let free_rank = cols - nonzero.len();
        let torsion = nonzero.into_iter().filter(|d| !d.is_one()).collect();
        Self { free_rank, torsion }
    }
}

impl std::fmt::Display for AbelianInvariants {
    /// `Z ⊕ Z/2 ⊕ Z/6`, or `0` for the trivial group.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let parts: Vec<String> = std::iter::repeat_n("Z".to_string(), self.free_rank)
            .chain(self.torsion.iter().map(|t| format!("Z/{t}")))
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Diagonal of the Smith normal form of a `rows.len() x cols` integer matrix:
/// `min(rows, cols)` nonnegative entries, each dividing the next, zeros last.
///
/// Pivots are chosen by minimal absolute value among the remaining entries.
#[allow(clippy::needless_range_loop)] // row and column operations index two rows at once
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    assert!(m.iter().all(|r| r.len() == cols), "ragged matrix");
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        // smallest nonzero entry in the trailing block
        let Some((pi, pj)) = min_abs_entry(&m, k, cols) else {
            diag.extend(std::iter::repeat_n(<BigInt as Zero>::zero(), n - k));
            break;
        };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut dirty = false;
            // clear column k below the pivot
            for i in k + 1..rows {
                if Zero::is_zero(&m[i][k]) {
                    continue;
                }
                let q = m[i][k].div_floor(&m[k][k]);
                if !Zero::is_zero(&q) {
                    for j in k..cols {
                        let v = &q * &m[k][j];
                        m[i][j] -= v;
                    }
                }
                if !Zero::is_zero(&m[i][k]) {
                    dirty = true;
                }
            }
            // clear row k right of the pivot
            for j in k + 1..cols {
                if Zero::is_zero(&m[k][j]) {
                    continue;
                }
                let q = m[k][j].div_floor(&m[k][k]);
                if !Zero::is_zero(&q) {
                    for row in m.iter_mut().skip(k) {
                        let v = &q * &row[k];
                        row[j] -= v;
                    }
                }
                if !Zero::is_zero(&m[k][j]) {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility: the pivot must divide the rest of the block
                let bad = (k + 1..rows)
                    .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !Zero::is_zero(&(&m[i][j] % &m[k][k])));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        // fold row i into row k and retry
                        for j in k..cols {
                            let v = m[i][j].clone();
                            m[k][j] += v;
                        }
                        continue;
                    }
                }
            }
            // a smaller remainder appeared; move it to the pivot slot
            let (pi, pj) = min_abs_entry_in_cross(&m, k, rows, cols);
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
        }
        diag.push(m[k][k].abs());
    }
    diag
}

fn min_abs_entry(m: &[Vec<BigInt>], k: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in m.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().take(cols).skip(k) {
            if Zero::is_zero(v) {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smallest nonzero entry in row `k` or column `k` of the trailing block.
#[allow(clippy::needless_range_loop)]
fn min_abs_entry_in_cross(m: &[Vec<BigInt>], k: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (k, k, m[k][k].abs());
    for (i, row) in m.iter().enumerate().take(rows).skip(k + 1) {
        let a = row[k].abs();
        if !Zero::is_zero(&a) && a < best.2 {
            best = (i, k, a);
        }
    }
    for j in k + 1..cols {
        let a = m[k][j].abs();
        if !Zero::is_zero(&a) && a < best.2 {
            best = (k, j, a);
        }
    }
    (best.0, best.1)
}

mod bigint_list {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| match i64::try_from(x) {
                Ok(n) => Repr::Small(n),
                Err(_) => Repr::Big(x.to_string()),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Repr::Small(n) => Ok(BigInt::from(n)),
                Repr::Big(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}
