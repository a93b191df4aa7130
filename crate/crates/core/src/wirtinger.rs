//! Wirtinger presentations of knot groups.
//!
//! Sign convention: at a positive crossing the outgoing under-arc satisfies
//! `g_out = g_over g_in g_over^-1`; at a negative crossing
//! `g_out = g_over^-1 g_in g_over`. The stored relator is
//! `g_over^±1 g_in g_over^∓1 g_out^-1`. For braids, `σ_i` is positive with the
//! strand leaving position `i` on top.

use std::collections::HashMap;

use crate::error::{Error, KnotError, Result};
use crate::knot::{mirror_braid, torus_braid, Braid, KnotExpr, PdCode};
use crate::presentation::{GroupPresentation, Word};

/// Union-find over arc labels.
struct Arcs {
    parent: Vec<usize>,
}

impl Arcs {
    fn new() -> Self {
        Self { parent: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Maps each class to a generator index `1..`, numbering `first` as 1 and
    /// the rest in order of their smallest label.
    fn numbering(&mut self, first: usize) -> HashMap<usize, i32> {
        let mut ids = HashMap::new();
        let root = self.find(first);
        ids.insert(root, 1);
        for x in 0..self.parent.len() {
            let r = self.find(x);
            let next = ids.len() as i32 + 1;
            ids.entry(r).or_insert(next);
        }
        ids
    }
}

/// One crossing in terms of raw arc labels.
struct Crossing {
    over: usize,
    under_in: usize,
    under_out: usize,
    positive: bool,
}

fn assemble(mut arcs: Arcs, crossings: &[Crossing], meridian_arc: usize) -> GroupPresentation {
    let ids = arcs.numbering(meridian_arc);
    let relators = crossings
        .iter()
        .map(|x| {
            let over = ids[&arcs.find(x.over)];
            let inn = ids[&arcs.find(x.under_in)];
            let out = ids[&arcs.find(x.under_out)];
            let e = if x.positive { 1 } else { -1 };
            vec![e * over, inn, -e * over, -out]
        })
        .collect();
    GroupPresentation::new(ids.len(), relators).expect("Wirtinger relators use declared arcs")
}

/// Wirtinger presentation of a braid closure: one generator per arc, one
/// relator per crossing, meridian on the arc entering strand 1 at the top.
/// The redundant relator is kept.
pub fn wirtinger_from_braid(b: &Braid) -> Result<GroupPresentation> {
    let components = b.closure_components();
    if components != 1 {
        return Err(KnotError::Semantic(format!(
            "braid closure has {components} components, not a knot"
        ))
        .into());
    }
    let mut arcs = Arcs::new();
    let top: Vec<usize> = (0..b.strands()).map(|_| arcs.fresh()).collect();
    let mut at = top.clone();
    let mut crossings = Vec::with_capacity(b.crossings());
    for &k in b.word() {
        let i = k.unsigned_abs() as usize - 1;
        let (left, right) = (at[i], at[i + 1]);
        let fresh = arcs.fresh();
        if k > 0 {
            // left strand passes over towards position i+1
            crossings.push(Crossing {
                over: left,
                under_in: right,
                under_out: fresh,
                positive: true,
            });
            at[i] = fresh;
            at[i + 1] = left;
        } else {
            crossings.push(Crossing {
                over: right,
                under_in: left,
                under_out: fresh,
                positive: false,
            });
            at[i] = right;
            at[i + 1] = fresh;
        }
    }
    for (bottom, top) in at.iter().zip(&top) {
        arcs.union(*bottom, *top);
    }
    Ok(assemble(arcs, &crossings, top[0]))
}

/// Wirtinger presentation from a PD code; the arc containing edge 1 is the
/// meridian. The empty code gives `⟨g1 | ⟩`.
pub fn wirtinger_from_pd(code: &PdCode) -> Result<GroupPresentation> {
    if code.is_empty() {
        return Ok(GroupPresentation::new(1, vec![]).unwrap());
    }
    let oriented = code.oriented_crossings()?;
    let edges = 2 * code.len();
    let mut arcs = Arcs::new();
    for _ in 0..edges {
        arcs.fresh();
    }
    let ix = |l: u32| l as usize - 1;
    for x in &oriented {
        arcs.union(ix(x.over_in), ix(x.over_out));
    }
    let crossings: Vec<Crossing> = oriented
        .iter()
        .map(|x| Crossing {
            over: ix(x.over_in),
            under_in: ix(x.under_in),
            under_out: ix(x.under_out),
            positive: x.positive,
        })
        .collect();
    Ok(assemble(arcs, &crossings, 0))
}

/// Knot group of a connected sum: disjoint union of the two presentations plus
/// one relator identifying the meridians. The meridian of `a` is kept.
pub fn presentation_connected_sum(
    a: &GroupPresentation,
    b: &GroupPresentation,
) -> GroupPresentation {
    let offset = a.num_generators() as i32;
    let shift = |w: &Word| -> Word { w.iter().map(|&l| l + l.signum() * offset).collect() };
    let mut relators: Vec<Word> = a.relators.clone();
    relators.extend(b.relators.iter().map(shift));
    relators.push(vec![a.meridian as i32, -(b.meridian as i32 + offset)]);
    GroupPresentation::with_meridian(
        a.num_generators() + b.num_generators(),
        relators,
        a.meridian,
    )
    .expect("connected sum of valid presentations is valid")
}

/// The unknot group `⟨g1 | ⟩`.
pub fn unknot_presentation() -> GroupPresentation {
    GroupPresentation::new(1, vec![]).unwrap()
}

/// Wirtinger-style presentation of any knot expression. Mirrors are pushed
/// down to braids and PD codes; connected sums are formed at the group level.
pub fn knot_group(k: &KnotExpr) -> Result<GroupPresentation> {
    lower(k, false)
}

fn lower(k: &KnotExpr, mirrored: bool) -> Result<GroupPresentation> {
    match k {
        KnotExpr::Unknot => Ok(unknot_presentation()),
        KnotExpr::TorusKnot { p, q } => {
            let b = torus_braid(*p, *q).map_err(Error::from)?;
            wirtinger_from_braid(&if mirrored { mirror_braid(&b) } else { b })
        }
        KnotExpr::Braid(b) => {
            if mirrored {
                wirtinger_from_braid(&mirror_braid(b))
            } else {
                wirtinger_from_braid(b)
            }
        }
        KnotExpr::Pd(code) => {
            if mirrored {
                wirtinger_from_pd(&code.mirror())
            } else {
                wirtinger_from_pd(code)
            }
        }
        KnotExpr::Mirror(inner) => lower(inner, !mirrored),
        KnotExpr::ConnectedSum(a, b) => Ok(presentation_connected_sum(
            &lower(a, mirrored)?,
            &lower(b, mirrored)?,
        )),
    }
}
