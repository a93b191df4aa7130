//! Integer Laurent polynomials in a single variable `t`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Laurent polynomial `sum_i coeffs[i] * t^(min_exp + i)` with arbitrary
/// precision integer coefficients.
///
/// The first and last coefficients are always nonzero; the zero polynomial has
/// no coefficients and `min_exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    /// `c * t^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    /// Builds a polynomial from a starting exponent and coefficients, trimming
    /// zero coefficients at both ends.
    pub fn new(min_exp: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self {
            min_exp: min_exp + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Width of the exponent span; `None` for zero.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    /// Coefficient of `t^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.min_exp;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// True when the polynomial is `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// The substitution `t -> t^-1`.
    pub fn reciprocal(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            min_exp: -self.max_exp(),
            coeffs,
        }
    }

    /// Unit-normal representative: lowest exponent zero and positive constant
    /// term. Two polynomials agree up to `±t^k` iff their normalizations are equal.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let out = self.shift(-self.min_exp);
        if out.coeffs[0].is_negative() {
            -out
        } else {
            out
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero() || (self.min_exp == 0 && self.coeffs[0].is_positive())
    }

    pub fn eq_up_to_units(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// Value at an integer point. Panics on `t = 0` with negative exponents.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        assert!(
            !(t.is_zero() && self.min_exp < 0),
            "cannot evaluate a Laurent polynomial with negative exponents at 0"
        );
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        // acc is the value of the ordinary polynomial part; fold in t^min_exp.
        match self.min_exp.cmp(&0) {
            Ordering::Equal => acc,
            Ordering::Greater => acc * num_traits::pow(t.clone(), self.min_exp as usize),
            Ordering::Less => {
                let d = num_traits::pow(t.clone(), (-self.min_exp) as usize);
                let (q, r) = acc.div_rem(&d);
                assert!(r.is_zero(), "value is not an integer");
                q
            }
        }
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.min_exp, self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Exact quotient in `Z[t, t^-1]`, or `None` when `divisor` does not divide
    /// `self`. Panics on division by zero.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return None;
        }
        // Long division on the ordinary polynomial parts, from the top.
        let mut rem = self.coeffs.clone();
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.min_exp - divisor.min_exp, quot))
    }

    /// Pseudo-division of the ordinary polynomial parts (lowest exponents are
    /// ignored): returns `(scale, quot, rem)` with
    /// `scale * self = quot * divisor + rem` and `rem` shorter than `divisor`.
    pub(crate) fn pseudo_divide(&self, divisor: &Self) -> (BigInt, Self, Self) {
        assert!(!divisor.is_zero());
        let num = self.shift(-self.min_exp);
        let den = divisor.shift(-divisor.min_exp);
        if num.is_zero() || num.coeffs.len() < den.coeffs.len() {
            return (BigInt::one(), Self::zero(), num);
        }
        let lead = den.coeffs.last().unwrap().clone();
        let steps = num.coeffs.len() - den.coeffs.len() + 1;
        let mut rem = num.coeffs.clone();
        let mut quot = vec![BigInt::zero(); steps];
        let m = den.coeffs.len();
        let mut scale = BigInt::one();
        for k in (0..steps).rev() {
            let top = rem[k + m - 1].clone();
            if top.is_zero() {
                continue;
            }
            let g = top.gcd(&lead);
            let a = &lead / &g;
            let b = &top / &g;
            if !a.is_one() {
                for c in rem.iter_mut() {
                    *c *= &a;
                }
                for c in quot.iter_mut() {
                    *c *= &a;
                }
                scale *= &a;
            }
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &b * dc;
            }
            quot[k] = b;
        }
        (scale, Self::new(0, quot), Self::new(0, rem))
    }

    /// Greatest common divisor in `Z[t]` of the ordinary polynomial parts,
    /// returned in normalized form. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalize();
        let mut b = other.normalize();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let content = a.content().gcd(&b.content());
        a = a.primitive_part();
        b = b.primitive_part();
        while !b.is_zero() {
            if a.coeffs.len() < b.coeffs.len() {
                std::mem::swap(&mut a, &mut b);
            }
            let (_, _, r) = a.pseudo_divide(&b);
            a = b;
            b = r.primitive_part().normalize();
        }
        a.normalize().scale(&content)
    }

    /// Ordinary polynomial `sum coeffs[i] t^i` given lowest-degree first.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::new(0, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `t^2 - t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exp = self.min_exp + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || exp == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match exp {
                0 => {}
                1 => f.write_str("t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().max(rhs.max_exp());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_exp - lo) as usize + i] += c;
        }
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Product of two Laurent polynomials.
pub fn mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a * b
}

/// JSON carrier `{min_exp, coeffs}`. Coefficients that fit in an `i64` are
/// written as numbers, larger ones as decimal strings.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    min_exp: i64,
    coeffs: Vec<IntRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => IntRepr::Small(v),
                Err(_) => IntRepr::Big(c.to_string()),
            })
            .collect();
        PolyRepr {
            min_exp: self.min_exp,
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .into_iter()
            .map(|c| match c {
                IntRepr::Small(v) => Ok(BigInt::from(v)),
                IntRepr::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::new(repr.min_exp, coeffs))
    }
}
