//! Exact algebraic invariants for twist rim surgery on embedded surfaces.
//!
//! The pipeline runs from a knot expression ([`knot`]) to a Wirtinger
//! presentation ([`wirtinger`]), through Fox calculus to the Alexander
//! polynomial ([`alexander`]), and on to branched-cover homology ([`covers`])
//! and group-theoretic checks ([`group`]). [`surgery`] combines them into a
//! per-knot report. Everything is computed with arbitrary-precision integers.
//!
//! ```
//! use twistrim::{alexander_polynomial, knot_group, parse_knot};
//!
//! let k = parse_knot("T(2,3)#mirror(T(2,3))").unwrap();
//! let delta = alexander_polynomial(&knot_group(&k).unwrap()).unwrap();
//! assert_eq!(delta.to_string(), "t^4 - 2t^3 + 3t^2 - 2t + 1");
//! ```

pub mod alexander;
pub mod cli;
pub mod covers;
pub mod error;
pub mod group;
pub mod knot;
pub mod matrix;
pub mod poly;
pub mod presentation;
pub mod surgery;
pub mod wirtinger;

pub use alexander::{
    alexander_matrix, alexander_polynomial, fox_derivative, resultant_with_cyclotomic,
    torus_alexander, AlexMatrix,
};
pub use covers::{
    branched_cover_order, branched_cover_structure, unbranched_cover_is_homology_circle,
    CoverHomology, CoverOrder,
};
pub use error::{Error, KnotError, Result};
pub use group::{
    abelianization, is_cyclic_of_order, tietze_simplify, todd_coxeter, CosetStatus, CosetTable,
    Verdict, DEFAULT_COSET_BUDGET,
};
pub use knot::{mirror_braid, parse_knot, torus_braid, Braid, KnotExpr, PdCode, SurgeryParams};
pub use matrix::AbelianInvariants;
pub use poly::LaurentPoly;
pub use presentation::{GroupPresentation, Word};
pub use surgery::{
    classify, enumerate_examples, ribbon_certificate, twist_rim_presentation, Ribbon, SurgeryReport,
};
pub use wirtinger::{
    knot_group, presentation_connected_sum, wirtinger_from_braid, wirtinger_from_pd,
};
