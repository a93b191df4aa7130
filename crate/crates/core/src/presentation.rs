//! Finitely presented groups and free-group words.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the free group: letter `i > 0` is generator `g_i`, `-i` its
/// inverse. Generators are numbered from 1.
pub type Word = Vec<i32>;

/// `⟨ generators | relators ⟩` with a distinguished meridian generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    /// 1-based index of the meridian generator.
    pub meridian: usize,
}

impl GroupPresentation {
    /// Presentation on `g1..gn` with the given relators, meridian `g1`.
    pub fn new(n: usize, relators: Vec<Word>) -> Result<Self> {
        Self::with_meridian(n, relators, 1)
    }

    pub fn with_meridian(n: usize, relators: Vec<Word>, meridian: usize) -> Result<Self> {
        let p = Self {
            generators: (1..=n).map(|i| format!("g{i}")).collect(),
            relators,
            meridian,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.generators.len();
        if self.meridian == 0 || self.meridian > n {
            return Err(Error::InvalidPresentation(format!(
                "meridian index {} outside 1..={n}",
                self.meridian
            )));
        }
        for (r, w) in self.relators.iter().enumerate() {
            if let Some(&bad) = w.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > n) {
                return Err(Error::InvalidPresentation(format!(
                    "relator {} uses undeclared letter {bad}",
                    r + 1
                )));
            }
        }
        Ok(())
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// Integer matrix of relator exponent sums (rows relators, columns generators).
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.generators.len();
        self.relators
            .iter()
            .map(|w| {
                let mut row = vec![0i64; n];
                for &l in w {
                    row[l.unsigned_abs() as usize - 1] += l.signum() as i64;
                }
                row
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let p: Self =
            serde_json::from_str(s).map_err(|e| Error::InvalidPresentation(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }
}

impl std::fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨ {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                if w.is_empty() {
                    return "1".to_string();
                }
                w.iter()
                    .map(|&l| {
                        let name = &self.generators[l.unsigned_abs() as usize - 1];
                        if l > 0 {
                            name.clone()
                        } else {
                            format!("{name}^-1")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{} ⟩", rels.join(", "))
    }
}

pub fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|l| -l).collect()
}

/// `w^k` for any integer `k`.
pub fn power(w: &[i32], k: i64) -> Word {
    let base = if k < 0 { inverse(w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancelling inverse letters at the two ends.
pub fn cyclic_reduce(w: &[i32]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Canonical representative of a cyclically reduced word under cyclic
/// permutation and inversion; two relators with the same canonical form
/// have the same normal closure.
pub fn canonical_relator(w: &[i32]) -> Word {
    let w = cyclic_reduce(w);
    if w.is_empty() {
        return w;
    }
    let inv = inverse(&w);
    let mut best: Option<Word> = None;
    for cand in [&w, &inv] {
        for s in 0..cand.len() {
            let rot: Word = cand[s..].iter().chain(&cand[..s]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(cyclic_reduce(&[-1, 2, 3, 1]), vec![2, 3]);
        assert_eq!(cyclic_reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(power(&[1, 2], -2), vec![-2, -1, -2, -1]);
    }

    #[test]
    fn canonical_identifies_rotations_and_inverses() {
        let a = canonical_relator(&[2, 1, 2, -1, -2, -1]);
        let b = canonical_relator(&[1, 2, 1, -2, -1, -2]);
        assert_eq!(a, b);
        assert_ne!(canonical_relator(&[1, 1, 2]), canonical_relator(&[1, 2, 2]));
    }

    #[test]
    fn json_shape_and_validation() {
        let p = GroupPresentation::new(2, vec![vec![1, 2, -1, -2]]).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"generators":["g1","g2"],"relators":[[1,2,-1,-2]],"meridian":1}"#
        );
        assert_eq!(GroupPresentation::from_json(&p.to_json()).unwrap(), p);
        assert!(GroupPresentation::new(1, vec![vec![2]]).is_err());
        assert!(GroupPresentation::with_meridian(1, vec![], 2).is_err());
        assert!(GroupPresentation::from_json(
            r#"{"generators":["a"],"relators":[[0]],"meridian":1}"#
        )
        .is_err());
    }

    #[test]
    fn exponent_sums() {
        let p = GroupPresentation::new(3, vec![vec![1, 2, -1, -3]]).unwrap();
        assert_eq!(p.exponent_matrix(), vec![vec![0, 1, -1]]);
    }
}
