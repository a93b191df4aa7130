//! Knot expressions, their text syntax, and braid lowering.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr := term ('#' term)*
//! term := 'unknot' | 'T(' p ',' q ')' | 'mirror(' expr ')'
//!       | 'braid(' strands ';' letter* ')' | 'pd(' tuple (',' tuple)* ')'
//!       | '(' expr ')'
//! tuple := '(' a ',' b ',' c ',' d ')'
//! ```
//!
//! `#` associates to the left. PD tuples list arc labels counterclockwise from
//! the incoming under-strand.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::KnotError;

/// A braid on `strands` strands. Letter `k > 0` is the generator `σ_k`,
/// `k < 0` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Braid {
    strands: usize,
    word: Vec<i32>,
}

impl Braid {
    /// Checks letter ranges; the closure may still be a link.
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, KnotError> {
        if strands == 0 {
            return Err(KnotError::Semantic(
                "a braid needs at least one strand".into(),
            ));
        }
        for &k in &word {
            if k == 0 || k.unsigned_abs() as usize >= strands {
                return Err(KnotError::Semantic(format!(
                    "braid letter {k} out of range for {strands} strands"
                )));
            }
        }
        Ok(Self { strands, word })
    }

    /// Like [`Braid::new`] but also requires a single-component closure.
    pub fn knot(strands: usize, word: Vec<i32>) -> Result<Self, KnotError> {
        let b = Self::new(strands, word)?;
        let c = b.closure_components();
        if c != 1 {
            return Err(KnotError::Semantic(format!(
                "braid closure has {c} components, not a knot"
            )));
        }
        Ok(b)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn crossings(&self) -> usize {
        self.word.len()
    }

    /// Permutation induced on strand positions: `perm[start] = end`.
    pub fn permutation(&self) -> Vec<usize> {
        // pos[p] = starting strand currently at position p
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &k in &self.word {
            let i = k.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (end, &start) in pos.iter().enumerate() {
            perm[start] = end;
        }
        perm
    }

    /// Number of cycles of the permutation, i.e. components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        cycles
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid({};", self.strands)?;
        for k in &self.word {
            write!(f, " {k}")?;
        }
        f.write_str(")")
    }
}

/// Braid whose closure is the torus knot `T(p, q)`: `(σ_1 ... σ_{p-1})^q` on
/// `p` strands.
pub fn torus_braid(p: u32, q: u32) -> Result<Braid, KnotError> {
    if p < 2 {
        return Err(KnotError::Semantic(format!(
            "T({p},{q}) needs at least two strands; it is the unknot"
        )));
    }
    if q == 0 || p.gcd(&q) != 1 {
        return Err(KnotError::NotAKnot { p, q });
    }
    let word = (0..q).flat_map(|_| 1..p as i32).collect();
    Ok(Braid {
        strands: p as usize,
        word,
    })
}

/// Letterwise negation; the closure is the mirror image.
pub fn mirror_braid(b: &Braid) -> Braid {
    Braid {
        strands: b.strands,
        word: b.word.iter().map(|k| -k).collect(),
    }
}

/// A planar diagram code: one 4-tuple of edge labels per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

/// Orientation data for one crossing of a validated PD code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct PdCrossing {
    pub under_in: u32,
    pub under_out: u32,
    pub over_in: u32,
    pub over_out: u32,
    pub positive: bool,
}

impl PdCode {
    /// Validates that every label occurs exactly twice and that the labels
    /// run consecutively `1..=2n` along a single oriented component.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self, KnotError> {
        let code = Self { crossings };
        code.oriented_crossings()?;
        Ok(code)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub(crate) fn oriented_crossings(&self) -> Result<Vec<PdCrossing>, KnotError> {
        let n = self.crossings.len() as u32;
        let edges = 2 * n;
        let mut count: HashMap<u32, u32> = HashMap::new();
        for t in &self.crossings {
            for &l in t {
                *count.entry(l).or_default() += 1;
            }
        }
        if let Some((l, c)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(KnotError::MalformedPd(format!(
                "label {l} occurs {c} times, expected exactly twice"
            )));
        }
        if let Some(l) = count.keys().find(|&&l| l == 0 || l > edges) {
            return Err(KnotError::MalformedPd(format!(
                "label {l} outside 1..={edges}"
            )));
        }
        let next = |l: u32| l % edges + 1;
        let mut out = Vec::with_capacity(self.crossings.len());
        let mut succ_seen = vec![false; edges as usize + 1];
        for (idx, &[a, b, c, d]) in self.crossings.iter().enumerate() {
            if c != next(a) {
                return Err(if c < a && c != 1 {
                    KnotError::MultiComponentPd
                } else {
                    KnotError::InconsistentOrientation(idx)
                });
            }
            let (over_in, over_out, positive) = if b == next(d) {
                (d, b, true)
            } else if d == next(b) {
                (b, d, false)
            } else if b.max(d) - b.min(d) > 1 && (b == 1 || d == 1) {
                return Err(KnotError::MultiComponentPd);
            } else {
                return Err(KnotError::InconsistentOrientation(idx));
            };
            for from in [a, over_in] {
                if std::mem::replace(&mut succ_seen[from as usize], true) {
                    return Err(KnotError::InconsistentOrientation(idx));
                }
            }
            out.push(PdCrossing {
                under_in: a,
                under_out: c,
                over_in,
                over_out,
                positive,
            });
        }
        Ok(out)
    }

    /// Mirror image: every crossing switches over and under.
    pub fn mirror(&self) -> PdCode {
        let crossings = self
            .oriented_crossings()
            .expect("PdCode is validated at construction")
            .iter()
            .zip(&self.crossings)
            .map(|(x, &[a, b, c, d])| {
                // restart the counterclockwise listing at the old over-strand's
                // incoming edge, which becomes the new incoming under-strand
                if x.over_in == d {
                    [d, a, b, c]
                } else {
                    [b, c, d, a]
                }
            })
            .collect();
        PdCode { crossings }
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("pd(")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b},{c},{d})")?;
        }
        f.write_str(")")
    }
}

/// Abstract syntax of a knot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KnotExpr {
    Unknot,
    TorusKnot { p: u32, q: u32 },
    Mirror(Box<KnotExpr>),
    ConnectedSum(Box<KnotExpr>, Box<KnotExpr>),
    Braid(Braid),
    Pd(PdCode),
}

impl KnotExpr {
    /// Torus knot, normalized to the unknot when `p` or `q` is 1.
    pub fn torus(p: u32, q: u32) -> Result<Self, KnotError> {
        if p == 0 || q == 0 || p.gcd(&q) != 1 {
            return Err(KnotError::NotAKnot { p, q });
        }
        if p == 1 || q == 1 {
            return Ok(KnotExpr::Unknot);
        }
        Ok(KnotExpr::TorusKnot { p, q })
    }

    pub fn mirror(self) -> Self {
        KnotExpr::Mirror(Box::new(self))
    }

    pub fn sum(self, rhs: KnotExpr) -> Self {
        KnotExpr::ConnectedSum(Box::new(self), Box::new(rhs))
    }

    /// Flattened connected summands (left to right).
    pub fn summands(&self) -> Vec<&KnotExpr> {
        match self {
            KnotExpr::ConnectedSum(a, b) => {
                let mut v = a.summands();
                v.extend(b.summands());
                v
            }
            other => vec![other],
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("unknot"),
            KnotExpr::TorusKnot { p, q } => write!(f, "T({p},{q})"),
            KnotExpr::Mirror(k) => write!(f, "mirror({k})"),
            KnotExpr::ConnectedSum(a, b) => match **b {
                KnotExpr::ConnectedSum(..) => write!(f, "{a}#({b})"),
                _ => write!(f, "{a}#{b}"),
            },
            KnotExpr::Braid(b) => b.fmt(f),
            KnotExpr::Pd(p) => p.fmt(f),
        }
    }
}

impl std::str::FromStr for KnotExpr {
    type Err = KnotError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_knot(s)
    }
}

/// Parses and validates a knot expression.
pub fn parse_knot(text: &str) -> Result<KnotExpr, KnotError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> KnotError {
        KnotError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), KnotError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<i64, KnotError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && (self.src[self.pos] == b'-' || self.src[self.pos] == b'+') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.syntax("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.syntax("integer out of range")
            })
    }

    fn uint<T: TryFrom<i64>>(&mut self) -> Result<T, KnotError> {
        let at = self.pos;
        let v = self.int()?;
        T::try_from(v).map_err(|_| KnotError::Syntax {
            offset: at,
            message: format!("expected a nonnegative integer, got {v}"),
        })
    }

    fn expr(&mut self) -> Result<KnotExpr, KnotError> {
        let mut acc = self.term()?;
        while self.eat(b'#') {
            let rhs = self.term()?;
            acc = acc.sum(rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<KnotExpr, KnotError> {
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        let start = self.pos;
        let kw = self.keyword();
        match kw.as_str() {
            "unknot" => Ok(KnotExpr::Unknot),
            "T" => {
                self.expect(b'(')?;
                let p = self.uint::<u32>()?;
                self.expect(b',')?;
                let q = self.uint::<u32>()?;
                self.expect(b')')?;
                KnotExpr::torus(p, q)
            }
            "mirror" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e.mirror())
            }
            "braid" => {
                self.expect(b'(')?;
                let strands = self.uint::<usize>()?;
                self.expect(b';')?;
                let mut word = Vec::new();
                while !self.eat(b')') {
                    if self.peek().is_none() {
                        return Err(self.syntax("unterminated braid word"));
                    }
                    let k = self.int()?;
                    word.push(
                        i32::try_from(k).map_err(|_| self.syntax("braid letter out of range"))?,
                    );
                    self.eat(b',');
                }
                Ok(KnotExpr::Braid(Braid::knot(strands, word)?))
            }
            "pd" => {
                self.expect(b'(')?;
                let mut crossings = Vec::new();
                if !self.eat(b')') {
                    loop {
                        self.expect(b'(')?;
                        let mut t = [0u32; 4];
                        for (i, slot) in t.iter_mut().enumerate() {
                            if i > 0 {
                                self.expect(b',')?;
                            }
                            *slot = self.uint::<u32>()?;
                        }
                        self.expect(b')')?;
                        crossings.push(t);
                        if self.eat(b')') {
                            break;
                        }
                        self.expect(b',')?;
                    }
                }
                Ok(KnotExpr::Pd(PdCode::new(crossings)?))
            }
            "" => {
                self.pos = start;
                self.skip_ws();
                Err(self.syntax("expected a knot term"))
            }
            other => {
                self.pos = start;
                self.skip_ws();
                Err(self.syntax(&format!("unknown knot term '{other}'")))
            }
        }
    }
}

/// Parameters of a twist rim surgery.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryParams {
    /// Divisibility of the surface class; `π₁` of the complement is `Z/d`.
    pub d: u64,
    /// Number of twists.
    pub m: i64,
    /// Whether the relative Seiberg–Witten invariant is assumed nontrivial.
    pub sw_nontrivial: bool,
    /// Degree of a complex curve in CP², when the surface is one.
    pub cp2_degree: Option<u64>,
}

impl SurgeryParams {
    pub fn new(d: u64, m: i64) -> Result<Self, KnotError> {
        if d == 0 {
            return Err(KnotError::Semantic("d must be at least 1".into()));
        }
        Ok(Self {
            d,
            m,
            sw_nontrivial: false,
            cp2_degree: None,
        })
    }

    pub fn with_sw(mut self, sw: bool) -> Self {
        self.sw_nontrivial = sw;
        self
    }

    /// Declares the surface a degree-`d` curve in CP², which forces a
    /// nontrivial Seiberg–Witten invariant. Degrees 1 and 2 are refused.
    pub fn with_cp2(mut self) -> Result<Self, KnotError> {
        if self.d < 3 {
            return Err(KnotError::Semantic(format!(
                "CP² degree {} is not supported; need degree at least 3",
                self.d
            )));
        }
        self.cp2_degree = Some(self.d);
        self.sw_nontrivial = true;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), KnotError> {
        if self.d == 0 {
            return Err(KnotError::Semantic("d must be at least 1".into()));
        }
        if let Some(deg) = self.cp2_degree {
            if deg != self.d {
                return Err(KnotError::Semantic(format!(
                    "CP² degree {deg} must equal d = {}",
                    self.d
                )));
            }
            if deg < 3 {
                return Err(KnotError::Semantic(format!(
                    "CP² degree {deg} is not supported; need degree at least 3"
                )));
            }
        }
        Ok(())
    }

    /// SW hypothesis, either asserted directly or implied by a CP² curve.
    pub fn sw_assumed(&self) -> bool {
        self.sw_nontrivial || self.cp2_degree.is_some()
    }
}
