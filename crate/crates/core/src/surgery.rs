//! Twist rim surgery: fundamental group of the surgered complement, the
//! smooth-knotting and topological-standardness verdicts, and the family of
//! ribbon examples `T(p,q) # mirror(T(p,q))`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::alexander::alexander_polynomial;
use crate::covers::{branched_cover_order, CoverOrder};
use crate::error::{Error, Result};
use crate::group::{is_cyclic_of_order, CosetStatus, Verdict, DEFAULT_COSET_BUDGET};
use crate::knot::{KnotExpr, SurgeryParams};
use crate::poly::LaurentPoly;
use crate::presentation::{free_reduce, power, GroupPresentation, Word};
use crate::wirtinger::knot_group;

/// `π₁(X − Σ_K(m))` from a knot group: adds `μ^d` and, for every other
/// generator `g_j`, the relator `g_j^-1 μ^-m g_j μ^m`, which imposes
/// invariance under the `m`-fold twist (conjugation by `μ^-m`). Relators that
/// reduce to the empty word (all of them when `m = 0`) are omitted.
pub fn twist_rim_presentation(p: &GroupPresentation, d: u64, m: i64) -> Result<GroupPresentation> {
    if p.meridian == 0 || p.meridian > p.num_generators() {
        return Err(Error::InvalidPresentation("missing meridian".into()));
    }
    if d == 0 {
        return Err(Error::BadDegree(0));
    }
    let mu = p.meridian as i32;
    let mut relators = p.relators.clone();
    relators.push(power(&[mu], d as i64));
    for j in 1..=p.num_generators() as i32 {
        if j == mu {
            continue;
        }
        let w: Word = std::iter::once(-j)
            .chain(power(&[mu], -m))
            .chain(std::iter::once(j))
            .chain(power(&[mu], m))
            .collect();
        let w = free_reduce(&w);
        if !w.is_empty() {
            relators.push(w);
        }
    }
    let out = GroupPresentation {
        generators: p.generators.clone(),
        relators,
        meridian: p.meridian,
    };
    out.validate()?;
    Ok(out)
}

/// `d ≡ ±1 (mod |m|)`. For `m = 0` the congruence holds only when `d = 1`.
pub fn congruent_to_plus_minus_one(d: u64, m: i64) -> bool {
    let m = m.unsigned_abs();
    if m == 0 {
        return d == 1;
    }
    if m <= 2 {
        // every residue mod 1 or 2 is ±1 except 0 mod 2
        return m == 1 || d % 2 == 1;
    }
    let r = d % m;
    r == 1 || r == m - 1
}

/// Syntactic ribbon certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ribbon {
    Certified,
    Unknown,
}

/// Certified when the flattened connected summands (unknots dropped) can be
/// paired off as `E` and `mirror(E)`.
pub fn ribbon_certificate(k: &KnotExpr) -> Ribbon {
    let mut pending: Vec<(KnotExpr, bool)> = Vec::new();
    for s in k.summands() {
        let (core, mirrored) = strip_mirrors(s);
        if *core == KnotExpr::Unknot {
            continue;
        }
        if let Some(pos) = pending
            .iter()
            .position(|(e, m)| e == core && *m != mirrored)
        {
            pending.swap_remove(pos);
        } else {
            pending.push((core.clone(), mirrored));
        }
    }
    if pending.is_empty() {
        Ribbon::Certified
    } else {
        Ribbon::Unknown
    }
}

fn strip_mirrors(k: &KnotExpr) -> (&KnotExpr, bool) {
    let mut k = k;
    let mut m = false;
    while let KnotExpr::Mirror(inner) = k {
        k = inner;
        m = !m;
    }
    (k, m)
}

/// How a `π₁` claim is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// `d ≡ ±1 (mod m)` collapses the group to `Z/d`.
    Theorem,
    /// Completed coset enumeration.
    Enumeration,
    /// Abelianization differs from `Z/d`.
    Abelianization,
    /// Coset budget ran out.
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Pi1 {
    Cyclic {
        order: u64,
        certificate: Certificate,
    },
    Finite {
        order: u64,
        certificate: Certificate,
    },
    Undetermined {
        certificate: Certificate,
    },
}

impl Pi1 {
    pub fn is_undetermined(&self) -> bool {
        matches!(self, Pi1::Undetermined { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SmoothVerdict {
    Yes { reason: String },
    NoEvidence { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TopVerdict {
    Yes { reason: String },
    No { failed: Vec<String> },
    Unknown { failed: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchedCover {
    pub order: CoverOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cp2Info {
    pub degree: u64,
    pub genus: u64,
}

/// Everything the classifier concluded about one `(K, d, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryReport {
    pub knot: String,
    pub d: u64,
    pub m: i64,
    pub sw_nontrivial: bool,
    pub alexander: LaurentPoly,
    pub pi1: Pi1,
    pub pi1_obstruction: bool,
    pub smoothly_knotted: SmoothVerdict,
    pub topologically_standard: TopVerdict,
    pub branched_cover: BranchedCover,
    pub ribbon: Ribbon,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cp2: Option<Cp2Info>,
}

impl SurgeryReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Genus of a smooth degree-`d` plane curve, `(d-1)(d-2)/2`.
pub fn cp2_genus(d: u64) -> u64 {
    (d - 1) * (d - 2) / 2
}

/// `π₁` of the surgered complement for a knot group. When `use_theorem` is
/// set and `d ≡ ±1 (mod m)` the answer `Z/d` is taken from the congruence;
/// otherwise the twist presentation is enumerated. The flag returned is true
/// when a finite certificate shows the group is not `Z/d`.
pub fn surgered_pi1(
    group: &GroupPresentation,
    d: u64,
    m: i64,
    budget: usize,
    use_theorem: bool,
) -> Result<(Pi1, bool)> {
    if use_theorem && congruent_to_plus_minus_one(d, m) {
        return Ok((
            Pi1::Cyclic {
                order: d,
                certificate: Certificate::Theorem,
            },
            false,
        ));
    }
    let pres = twist_rim_presentation(group, d, m)?;
    let check = is_cyclic_of_order(&pres, d, budget);
    Ok(match (check.verdict, check.enumeration) {
        (Verdict::Yes, _) => (
            Pi1::Cyclic {
                order: d,
                certificate: Certificate::Enumeration,
            },
            false,
        ),
        (Verdict::No, Some(CosetStatus::Complete(n))) => (
            Pi1::Finite {
                order: n as u64,
                certificate: Certificate::Enumeration,
            },
            true,
        ),
        (Verdict::No, _) => (
            Pi1::Undetermined {
                certificate: Certificate::Abelianization,
            },
            true,
        ),
        (Verdict::Unknown, _) => (
            Pi1::Undetermined {
                certificate: Certificate::BudgetExhausted,
            },
            false,
        ),
    })
}

/// Runs the full decision procedure for one knot and parameter set.
pub fn classify(k: &KnotExpr, params: &SurgeryParams, budget: usize) -> Result<SurgeryReport> {
    params.validate()?;
    let SurgeryParams { d, m, .. } = *params;
    let group = knot_group(k)?;
    let delta = alexander_polynomial(&group)?;
    let nontrivial_delta = !delta.is_one();
    let congruent = congruent_to_plus_minus_one(d, m);

    let (pi1, mut obstruction) = surgered_pi1(&group, d, m, budget, true)?;
    // d = 2, m even: the group is the knot group mod μ², which contains the
    // 2-fold branched-cover group (nontrivial for a nontrivial knot) with index 2.
    if d == 2 && m % 2 == 0 && nontrivial_delta {
        obstruction = true;
    }

    let sw = params.sw_assumed();
    let smoothly_knotted = if sw && nontrivial_delta {
        SmoothVerdict::Yes {
            reason:
                "relative Seiberg-Witten invariant nontrivial and Alexander polynomial is not 1, \
                     so the surgered pair is not diffeomorphic to the original"
                    .into(),
        }
    } else if !sw {
        SmoothVerdict::NoEvidence {
            reason: "Seiberg-Witten nontriviality not assumed".into(),
        }
    } else {
        SmoothVerdict::NoEvidence {
            reason: "Alexander polynomial is 1".into(),
        }
    };

    let order = branched_cover_order(&delta, d as i64)?;
    let ribbon = ribbon_certificate(k);
    let mut failed = Vec::new();
    if ribbon != Ribbon::Certified {
        failed.push("ribbon".to_string());
    }
    if !order.is_one() {
        failed.push(format!("homology circle (branched cover order {order})"));
    }
    if !congruent {
        failed.push(format!("d ≡ ±1 (mod m) with d = {d}, m = {m}"));
    }
    let topologically_standard = if obstruction {
        let mut f = vec!["pi1 is not Z/d".to_string()];
        f.extend(failed);
        TopVerdict::No { failed: f }
    } else if failed.is_empty() {
        TopVerdict::Yes {
            reason: "ribbon knot, unbranched cover is a homology circle, and d ≡ ±1 (mod m)".into(),
        }
    } else {
        TopVerdict::Unknown { failed }
    };

    Ok(SurgeryReport {
        knot: k.to_string(),
        d,
        m,
        sw_nontrivial: sw,
        alexander: delta,
        pi1,
        pi1_obstruction: obstruction,
        smoothly_knotted,
        topologically_standard,
        branched_cover: BranchedCover { order },
        ribbon,
        cp2: params.cp2_degree.map(|deg| Cp2Info {
            degree: deg,
            genus: cp2_genus(deg),
        }),
    })
}

/// One `(p, q, d, m)` row of the ribbon family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleRow {
    pub p: u32,
    pub q: u32,
    pub d: u64,
    pub m: i64,
    pub report: SurgeryReport,
}

/// Parameter tuples for the ribbon family in lexicographic `(p, q, d, m)`
/// order: coprime `2 ≤ p < q ≤ q_max` with `p ≤ p_max`, `2 ≤ d ≤ d_max` prime
/// to both, `2 ≤ m ≤ m_max` with `d ≡ ±1 (mod m)`.
pub fn example_parameters(
    p_max: u32,
    q_max: u32,
    d_max: u64,
    m_max: i64,
) -> Vec<(u32, u32, u64, i64)> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for q in p + 1..=q_max {
            if p.gcd(&q) != 1 {
                continue;
            }
            for d in 2..=d_max {
                if d.gcd(&(p as u64)) != 1 || d.gcd(&(q as u64)) != 1 {
                    continue;
                }
                for m in 2..=m_max {
                    if congruent_to_plus_minus_one(d, m) {
                        out.push((p, q, d, m));
                    }
                }
            }
        }
    }
    out
}

/// Classifies one row of the family with the SW hypothesis asserted.
pub fn example_row(p: u32, q: u32, d: u64, m: i64) -> Result<ExampleRow> {
    let j = KnotExpr::torus(p, q)?;
    let k = j.clone().sum(j.mirror());
    let params = SurgeryParams::new(d, m)?.with_sw(true);
    let report = classify(&k, &params, DEFAULT_COSET_BUDGET)?;
    Ok(ExampleRow { p, q, d, m, report })
}

fn row_qualifies(r: &ExampleRow) -> bool {
    matches!(r.report.smoothly_knotted, SmoothVerdict::Yes { .. })
        && matches!(r.report.topologically_standard, TopVerdict::Yes { .. })
        && r.report.branched_cover.order == CoverOrder::Finite(1.into())
}

/// Rows of the family that are smoothly knotted and topologically standard.
pub fn enumerate_examples(
    p_max: u32,
    q_max: u32,
    d_max: u64,
    m_max: i64,
) -> Result<Vec<ExampleRow>> {
    let mut rows = Vec::new();
    for (p, q, d, m) in example_parameters(p_max, q_max, d_max, m_max) {
        let row = example_row(p, q, d, m)?;
        if row_qualifies(&row) {
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Streaming form of [`enumerate_examples`].
pub fn examples_iter(
    p_max: u32,
    q_max: u32,
    d_max: u64,
    m_max: i64,
) -> impl Iterator<Item = Result<ExampleRow>> {
    example_parameters(p_max, q_max, d_max, m_max)
        .into_iter()
        .map(|(p, q, d, m)| example_row(p, q, d, m))
        .filter(|r| r.as_ref().map_or(true, row_qualifies))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{todd_coxeter, CosetStatus};
    use crate::knot::parse_knot;
    use crate::wirtinger::unknot_presentation;

    #[test]
    fn congruence_edge_cases() {
        assert!(congruent_to_plus_minus_one(5, 4));
        assert!(congruent_to_plus_minus_one(3, 4));
        assert!(!congruent_to_plus_minus_one(2, 2));
        assert!(congruent_to_plus_minus_one(3, 2));
        assert!(congruent_to_plus_minus_one(2, 1));
        assert!(congruent_to_plus_minus_one(2, 3));
        assert!(congruent_to_plus_minus_one(7, -6));
        assert!(!congruent_to_plus_minus_one(2, 0));
        assert!(congruent_to_plus_minus_one(1, 0));
        assert!(congruent_to_plus_minus_one(5, 3));
        assert!(!congruent_to_plus_minus_one(6, 4));
        assert!(!congruent_to_plus_minus_one(3, 3));
    }

    #[test]
    fn unknot_twist_presentation() {
        let p = twist_rim_presentation(&unknot_presentation(), 4, 3).unwrap();
        assert_eq!(p.relators, vec![vec![1, 1, 1, 1]]);
        assert_eq!(todd_coxeter(&p, 100).status, CosetStatus::Complete(4));
    }

    #[test]
    fn m_zero_d_one_is_trivial() {
        let k = parse_knot("T(2,3)").unwrap();
        let g = knot_group(&k).unwrap();
        let p = twist_rim_presentation(&g, 1, 0).unwrap();
        assert_eq!(p.relators.len(), g.relators.len() + 1);
        assert_eq!(todd_coxeter(&p, 100).status, CosetStatus::Complete(1));
    }

    #[test]
    fn ribbon_examples() {
        let c = |s: &str| ribbon_certificate(&parse_knot(s).unwrap());
        assert_eq!(c("T(2,3)#mirror(T(2,3))"), Ribbon::Certified);
        assert_eq!(c("T(2,3)"), Ribbon::Unknown);
        assert_eq!(c("unknot"), Ribbon::Certified);
        assert_eq!(
            c("mirror(T(2,5))#T(2,3)#T(2,5)#mirror(T(2,3))"),
            Ribbon::Certified
        );
        assert_eq!(c("T(2,3)#T(2,3)"), Ribbon::Unknown);
        assert_eq!(
            c("mirror(mirror(T(2,3)))#mirror(T(2,3))"),
            Ribbon::Certified
        );
    }

    #[test]
    fn classify_unknot() {
        let r = classify(&KnotExpr::Unknot, &SurgeryParams::new(3, 2).unwrap(), 1000).unwrap();
        assert!(r.alexander.is_one());
        assert_eq!(
            r.pi1,
            Pi1::Cyclic {
                order: 3,
                certificate: Certificate::Theorem
            }
        );
        assert!(matches!(
            r.smoothly_knotted,
            SmoothVerdict::NoEvidence { .. }
        ));
        assert!(matches!(r.topologically_standard, TopVerdict::Yes { .. }));
        assert!(!r.pi1_obstruction);
    }

    #[test]
    fn classify_refuses_low_cp2_degree() {
        let mut params = SurgeryParams::new(2, 3).unwrap();
        params.cp2_degree = Some(2);
        assert!(classify(&KnotExpr::Unknot, &params, 10).is_err());
    }

    #[test]
    fn exhausted_budget_is_undetermined() {
        let k = parse_knot("T(2,3)").unwrap();
        let r = classify(&k, &SurgeryParams::new(2, 2).unwrap(), 3).unwrap();
        assert_eq!(
            r.pi1,
            Pi1::Undetermined {
                certificate: Certificate::BudgetExhausted
            }
        );
        // the d = 2, m even argument still applies
        assert!(r.pi1_obstruction);
    }

    #[test]
    fn small_bounds_are_empty() {
        assert!(example_parameters(3, 3, 3, 3).is_empty());
        assert!(enumerate_examples(3, 3, 3, 3).unwrap().is_empty());
    }
}
