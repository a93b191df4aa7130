//! Fox calculus, Alexander matrices and polynomials, and resultants against
//! `t^d - 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, KnotError, Result};
use crate::group::abelianization;
use crate::matrix::bareiss_determinant;
use crate::poly::LaurentPoly;
use crate::presentation::GroupPresentation;

/// Matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl AlexMatrix {
    pub fn without_column(&self, col: usize) -> AlexMatrix {
        let entries: Vec<Vec<LaurentPoly>> = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        AlexMatrix {
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }

    pub fn without_row(&self, row: usize) -> AlexMatrix {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != row)
            .map(|(_, r)| r.clone())
            .collect();
        AlexMatrix {
            rows: self.rows - 1,
            cols: self.cols,
            entries,
        }
    }

    /// Determinant of a square matrix (Bareiss over `Z[t, t^-1]`).
    pub fn determinant(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss_determinant(self.entries.clone())
    }
}

/// Free derivative `∂w/∂g_i` pushed through the abelianization `g_j -> t`.
pub fn fox_derivative(w: &[i32], i: usize) -> LaurentPoly {
    let target = i as i32;
    let mut prefix = 0i64;
    let mut acc: Vec<(i64, i64)> = Vec::new();
    for &l in w {
        if l > 0 {
            if l == target {
                acc.push((prefix, 1));
            }
            prefix += 1;
        } else {
            if -l == target {
                acc.push((prefix - 1, -1));
            }
            prefix -= 1;
        }
    }
    acc.into_iter().fold(LaurentPoly::zero(), |s, (e, c)| {
        &s + &LaurentPoly::monomial(c, e)
    })
}

/// Rejects presentations whose abelianization is not `Z` with every generator
/// mapping to the same generator.
pub fn check_knot_group(p: &GroupPresentation) -> Result<()> {
    if let Some((r, _)) = p
        .exponent_matrix()
        .iter()
        .enumerate()
        .find(|(_, row)| row.iter().sum::<i64>() != 0)
    {
        return Err(Error::NotAKnotGroup(format!(
            "relator {} has nonzero total exponent",
            r + 1
        )));
    }
    let ab = abelianization(p);
    if ab.free_rank != 1 || !ab.torsion.is_empty() {
        return Err(Error::NotAKnotGroup(format!(
            "abelianization is {ab}, not Z"
        )));
    }
    Ok(())
}

/// Full Fox matrix: rows relators, columns generators.
pub fn alexander_matrix(p: &GroupPresentation) -> AlexMatrix {
    let cols = p.num_generators();
    let entries: Vec<Vec<LaurentPoly>> = p
        .relators
        .iter()
        .map(|w| (1..=cols).map(|i| fox_derivative(w, i)).collect())
        .collect();
    AlexMatrix {
        rows: entries.len(),
        cols,
        entries,
    }
}

/// Fox matrix with the meridian column removed. Its cokernel is the Alexander
/// module of the knot.
pub fn reduced_alexander_matrix(p: &GroupPresentation) -> AlexMatrix {
    alexander_matrix(p).without_column(p.meridian - 1)
}

/// Alexander polynomial of a knot-group presentation, normalized.
///
/// A square reduced matrix is handled by fraction-free elimination. With
/// surplus relators (Wirtinger presentations, connected sums) the result is
/// the gcd of all maximal minors from [`determinantal_divisor`]. Deleting a
/// fixed row is not safe there: in `unknot # K` the last row is the joining
/// relator, which is not redundant.
pub fn alexander_polynomial(p: &GroupPresentation) -> Result<LaurentPoly> {
    check_knot_group(p)?;
    let m = reduced_alexander_matrix(p);
    let delta = if m.cols == 0 {
        LaurentPoly::one()
    } else if m.rows == m.cols {
        m.determinant()
    } else {
        determinantal_divisor(&m)
    };
    Ok(delta.primitive_part().normalize())
}

/// Minor of the Fox matrix with one relator row and one generator column
/// deleted (0-based), normalized. Requires `relators == generators`.
pub fn alexander_minor(p: &GroupPresentation, row: usize, col: usize) -> LaurentPoly {
    let m = alexander_matrix(p).without_column(col).without_row(row);
    m.determinant().normalize()
}

/// Generator of the ideal of maximal minors of `m` over `Q[t, t^-1]`, made
/// primitive in `Z[t]`. Rows are reduced by Euclidean steps column by column,
/// which changes the maximal-minor ideal only by rational constants and
/// powers of `t`. Returns zero when `m` has rank below its column count.
pub fn determinantal_divisor(m: &AlexMatrix) -> LaurentPoly {
    let cols = m.cols;
    if m.rows < cols {
        return LaurentPoly::zero();
    }
    let mut rows: Vec<Vec<LaurentPoly>> = m.entries.clone();
    let mut product = LaurentPoly::one();
    for j in 0..cols {
        loop {
            // pivot: shortest nonzero entry in column j among rows j..
            let Some(piv) = (j..rows.len())
                .filter(|&i| !rows[i][j].is_zero())
                .min_by_key(|&i| rows[i][j].span().unwrap())
            else {
                return LaurentPoly::zero();
            };
            rows.swap(j, piv);
            let mut clean = true;
            for i in j + 1..rows.len() {
                if rows[i][j].is_zero() {
                    continue;
                }
                let (scale, q, _) = rows[i][j].pseudo_divide(&rows[j][j]);
                let shift = rows[i][j].min_exp() - rows[j][j].min_exp();
                let q = q.shift(shift);
                let scale = LaurentPoly::constant(scale);
                let pivot_row = rows[j].clone();
                for (x, pv) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &(&scale * x) - &(&q * pv);
                }
                make_primitive(&mut rows[i]);
                if !rows[i][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        product = (&product * &rows[j][j]).primitive_part();
    }
    product
}

fn make_primitive(row: &mut [LaurentPoly]) {
    let g = row.iter().fold(BigInt::zero(), |g, e| g.gcd(&e.content()));
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        *e = LaurentPoly::new(e.min_exp(), e.coeffs().iter().map(|c| c / &g).collect());
    }
}

/// Closed form `(1 - t)(1 - t^pq) / ((1 - t^p)(1 - t^q))` for the torus knot
/// `T(p, q)`, by exact division.
pub fn torus_alexander(p: u32, q: u32) -> Result<LaurentPoly> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(KnotError::NotAKnot { p, q }.into());
    }
    let one_minus = |k: u32| LaurentPoly::one() - LaurentPoly::monomial(1, k as i64);
    let num = &one_minus(1) * &one_minus(p * q);
    let den = &one_minus(p) * &one_minus(q);
    let quot = num
        .exact_div(&den)
        .expect("torus knot quotient is a polynomial for coprime p, q");
    Ok(quot.normalize())
}

/// Sylvester matrix of `f` and `g` (ordinary polynomials, coefficients given
/// lowest degree first): `deg g` rows of `f` followed by `deg f` rows of `g`.
pub fn sylvester_matrix(f: &[BigInt], g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    let n = df + dg;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for r in 0..dg {
        for (k, c) in f.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..df {
        for (k, c) in g.iter().rev().enumerate() {
            m[dg + r][r + k] = c.clone();
        }
    }
    m
}

/// `Res(t^d - 1, Δ')` where `Δ'` is the normalization of `Δ`; equals the
/// product of `Δ'(ω)` over all `d`-th roots of unity `ω`. Zero exactly when
/// `Δ` vanishes at some `d`-th root of unity.
pub fn resultant_with_cyclotomic(delta: &LaurentPoly, d: i64) -> Result<BigInt> {
    if d < 1 {
        return Err(Error::BadDegree(d));
    }
    if delta.is_zero() {
        return Err(Error::InvalidParams(
            "resultant with the zero polynomial".into(),
        ));
    }
    let g = delta.normalize();
    let mut f = vec![BigInt::zero(); d as usize + 1];
    f[0] = -BigInt::one();
    f[d as usize] = BigInt::one();
    Ok(bareiss_determinant(sylvester_matrix(&f, g.coeffs())))
}
