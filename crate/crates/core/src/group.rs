//! Computations with finitely presented groups: abelianization, Tietze
//! simplification, and Todd–Coxeter coset enumeration over the trivial
//! subgroup.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::matrix::AbelianInvariants;
use crate::presentation::{canonical_relator, cyclic_reduce, inverse, GroupPresentation, Word};

/// Default limit on live cosets.
pub const DEFAULT_COSET_BUDGET: usize = 1_000_000;

/// Invariant factors of the abelianization, from the Smith normal form of the
/// relator exponent-sum matrix.
pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let rows: Vec<Vec<BigInt>> = p
        .exponent_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    AbelianInvariants::from_relation_matrix(&rows, p.num_generators())
}

/// Outcome of a coset enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "order", rename_all = "snake_case")]
pub enum CosetStatus {
    Complete(usize),
    Exhausted,
}

/// Coset table for the trivial subgroup. When complete, rows are numbered
/// `0..order` with coset 0 the identity, and `table[c][col]` is the image of
/// coset `c` under generator `col / 2 + 1` (even column) or its inverse (odd
/// column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub table: Vec<Vec<u32>>,
    pub budget: usize,
    pub status: CosetStatus,
}

impl CosetTable {
    pub fn order(&self) -> Option<usize> {
        match self.status {
            CosetStatus::Complete(n) => Some(n),
            CosetStatus::Exhausted => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.status, CosetStatus::Complete(_))
    }

    /// Image of a coset under a signed generator letter.
    pub fn act(&self, coset: usize, letter: i32) -> usize {
        self.table[coset][column(letter)] as usize
    }

    /// Image of a coset under a word.
    pub fn act_word(&self, coset: usize, w: &[i32]) -> usize {
        w.iter().fold(coset, |c, &l| self.act(c, l))
    }
}

fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    2 * g + usize::from(letter < 0)
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    budget: usize,
    queue: VecDeque<u32>,
}

struct OutOfCosets;

impl Enumerator {
    fn new(gens: usize, budget: usize) -> Self {
        let width = 2 * gens;
        Self {
            width,
            table: vec![UNDEF; width],
            parent: vec![0],
            live: 1,
            budget,
            queue: VecDeque::new(),
        }
    }

    fn defined(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.width + x]
    }

    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.width + x] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, OutOfCosets> {
        if self.live >= self.budget || self.defined() >= UNDEF as usize {
            return Err(OutOfCosets);
        }
        let n = self.defined() as u32;
        self.parent.push(n);
        self.table.extend(std::iter::repeat_n(UNDEF, self.width));
        self.live += 1;
        self.set(c, x, n);
        self.set(n, x ^ 1, c);
        Ok(n)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut y = c;
        while self.parent[y as usize] != r {
            let next = self.parent[y as usize];
            self.parent[y as usize] = r;
            y = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(g) = self.queue.pop_front() {
            for x in 0..self.width {
                let h = self.get(g, x);
                if h == UNDEF {
                    continue;
                }
                self.set(h, x ^ 1, UNDEF);
                let e1 = self.rep(g);
                let e2 = self.rep(h);
                let t1 = self.get(e1, x);
                if t1 != UNDEF {
                    self.merge(e2, t1);
                    continue;
                }
                let t2 = self.get(e2, x ^ 1);
                if t2 != UNDEF {
                    self.merge(e1, t2);
                    continue;
                }
                self.set(e1, x, e2);
                self.set(e2, x ^ 1, e1);
            }
        }
    }

    /// Scans `rel` at coset `c`, defining new cosets until it closes.
    fn scan_and_fill(&mut self, c: u32, rel: &[usize]) -> Result<(), OutOfCosets> {
        if rel.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = rel.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.get(f, rel[i]) != UNDEF {
                f = self.get(f, rel[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, rel[j as usize] ^ 1) != UNDEF {
                b = self.get(b, rel[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, rel[i], b);
                self.set(b, rel[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, rel[i])?;
        }
    }

    /// Renumbers live cosets in increasing order, dropping dead rows.
    /// Returns the new index of the first live coset at or after `cursor`.
    #[allow(clippy::needless_range_loop)]
    fn compact(&mut self, cursor: usize) -> usize {
        let n = self.defined();
        let mut new_ix = vec![UNDEF; n];
        let mut next = 0u32;
        let mut new_cursor = None;
        for c in 0..n {
            if c >= cursor && new_cursor.is_none() && self.is_live(c as u32) {
                new_cursor = Some(next as usize);
            }
            if self.is_live(c as u32) {
                new_ix[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.width);
        for c in 0..n {
            if new_ix[c] == UNDEF {
                continue;
            }
            for x in 0..self.width {
                let v = self.get(c as u32, x);
                table.push(if v == UNDEF {
                    UNDEF
                } else {
                    new_ix[v as usize]
                });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        new_cursor.unwrap_or(next as usize)
    }

    fn run(&mut self, relators: &[Vec<usize>]) -> Result<(), OutOfCosets> {
        let mut c = 0usize;
        while c < self.defined() {
            if self.defined() > 4096 && self.defined() > 2 * self.live {
                c = self.compact(c);
                if c >= self.defined() {
                    break;
                }
            }
            let cc = c as u32;
            for rel in relators {
                if !self.is_live(cc) {
                    break;
                }
                self.scan_and_fill(cc, rel)?;
            }
            for x in 0..self.width {
                if !self.is_live(cc) {
                    break;
                }
                if self.get(cc, x) == UNDEF {
                    self.define(cc, x)?;
                }
            }
            c += 1;
        }
        Ok(())
    }
}

/// HLT coset enumeration over the trivial subgroup with at most `budget` live
/// cosets. Deterministic for a given presentation and budget.
pub fn todd_coxeter(p: &GroupPresentation, budget: usize) -> CosetTable {
    let budget = budget.max(1);
    let relators: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(|w| cyclic_reduce(w))
        .filter(|w| !w.is_empty())
        .map(|w| w.iter().map(|&l| column(l)).collect())
        .collect();
    let mut e = Enumerator::new(p.num_generators(), budget);
    match e.run(&relators) {
        Ok(()) => {
            e.compact(0);
            let order = e.defined();
            let table = e
                .table
                .chunks(e.width.max(1))
                .take(order)
                .map(|r| r.to_vec())
                .collect();
            CosetTable {
                table: if e.width == 0 {
                    vec![vec![]; order]
                } else {
                    table
                },
                budget,
                status: CosetStatus::Complete(order),
            }
        }
        Err(OutOfCosets) => CosetTable {
            table: Vec::new(),
            budget,
            status: CosetStatus::Exhausted,
        },
    }
}

/// Tietze simplification: cyclic reduction, removal of trivial and duplicate
/// relators, and elimination of non-meridian generators that occur exactly
/// once in some relator. At most `budget` eliminations are attempted, and
/// none that would push the total relator length above the input's.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> GroupPresentation {
    let cap = p.total_length();
    let mut gens = p.num_generators();
    let mut meridian = p.meridian;
    let mut rels = clean_relators(&p.relators);
    for _ in 0..budget {
        let Some((x, rels_after)) = best_elimination(&rels, gens, meridian, cap) else {
            break;
        };
        rels = rels_after
            .into_iter()
            .map(|w| drop_generator(&w, x))
            .collect();
        rels = clean_relators(&rels);
        if meridian > x {
            meridian -= 1;
        }
        gens -= 1;
    }
    GroupPresentation::with_meridian(gens, rels, meridian)
        .expect("Tietze moves keep presentations valid")
}

fn clean_relators(rels: &[Word]) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in rels {
        let w = cyclic_reduce(w);
        if w.is_empty() {
            continue;
        }
        if seen.insert(canonical_relator(&w)) {
            out.push(w);
        }
    }
    out
}

/// Picks the elimination with the smallest resulting total length, within
/// `cap`. Returns the generator and the relators after substitution (with the
/// defining relator removed).
fn best_elimination(
    rels: &[Word],
    gens: usize,
    meridian: usize,
    cap: usize,
) -> Option<(usize, Vec<Word>)> {
    let mut best: Option<(usize, usize, Vec<Word>)> = None;
    let mut order: Vec<usize> = (0..rels.len()).collect();
    order.sort_by_key(|&i| rels[i].len());
    for &ri in &order {
        let r = &rels[ri];
        for x in 1..=gens {
            if x == meridian {
                continue;
            }
            let hits: Vec<usize> = (0..r.len())
                .filter(|&k| r[k].unsigned_abs() as usize == x)
                .collect();
            if hits.len() != 1 {
                continue;
            }
            let k = hits[0];
            // r = u x^e v  ==>  x = u^-1 v^-1 (e = 1) or x = v u (e = -1)
            let u = &r[..k];
            let v = &r[k + 1..];
            let value: Word = if r[k] > 0 {
                inverse(u).into_iter().chain(inverse(v)).collect()
            } else {
                v.iter().chain(u).copied().collect()
            };
            let substituted: Vec<Word> = rels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != ri)
                .map(|(_, w)| cyclic_reduce(&substitute(w, x, &value)))
                .collect();
            let total: usize = clean_relators(&substituted).iter().map(Vec::len).sum();
            if total > cap {
                continue;
            }
            if best.as_ref().is_none_or(|(t, _, _)| total < *t) {
                best = Some((total, x, substituted));
            }
        }
    }
    best.map(|(_, x, rels)| (x, rels))
}

fn substitute(w: &[i32], x: usize, value: &[i32]) -> Word {
    let inv = inverse(value);
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        if l.unsigned_abs() as usize == x {
            out.extend_from_slice(if l > 0 { value } else { &inv });
        } else {
            out.push(l);
        }
    }
    out
}

fn drop_generator(w: &[i32], x: usize) -> Word {
    w.iter()
        .map(|&l| {
            debug_assert_ne!(l.unsigned_abs() as usize, x);
            if l.unsigned_abs() as usize > x {
                l - l.signum()
            } else {
                l
            }
        })
        .collect()
}

/// Three-valued answer backed by a finite certificate when definite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Evidence gathered by [`is_cyclic_of_order`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCheck {
    pub verdict: Verdict,
    pub abelianization: AbelianInvariants,
    /// `None` when the abelianization alone decided the answer.
    pub enumeration: Option<CosetStatus>,
}

/// Decides whether `p` presents `Z/d`. `No` only on a finite certificate: an
/// abelianization other than `Z/d`, or a completed enumeration of a different
/// order. Budget exhaustion gives `Unknown`.
pub fn is_cyclic_of_order(p: &GroupPresentation, d: u64, budget: usize) -> CyclicCheck {
    let ab = abelianization(p);
    if !ab.is_cyclic_of_order(d) {
        return CyclicCheck {
            verdict: Verdict::No,
            abelianization: ab,
            enumeration: None,
        };
    }
    let status = todd_coxeter(p, budget).status;
    let verdict = match status {
        CosetStatus::Complete(n) if n as u64 == d => Verdict::Yes,
        CosetStatus::Complete(_) => Verdict::No,
        CosetStatus::Exhausted => Verdict::Unknown,
    };
    CyclicCheck {
        verdict,
        abelianization: ab,
        enumeration: Some(status),
    }
}
