//! Interpretation layer for knot classes in a genus-`g` handlebody.
//!
//! A handlebody deformation-retracts onto a one-vertex spine, identifying
//! its fundamental group with the free group on `genus` generators, so every
//! topological flag here is computed from the algebraic verdict of
//! [`crate::separability::decide`]. The module performs no topology of its
//! own; each flag names the classical result that licenses it, and the
//! statements are restricted to handlebodies on purpose.

use serde::Serialize;

use crate::error::Result;
use crate::separability::{decide, Limits, Verdict};
use crate::word::{CyclicWord, Rank, Word};

/// Citation strings attached to each flag.
pub const CITE_INCOMPRESSIBLE: &str = "Lemma 1.1: for a compact, connected, irreducible 3-manifold M with non-empty boundary and an oriented simple closed curve K in bd(M), the surface bd(M) minus K is incompressible in M if and only if K binds pi_1(M).";
pub const CITE_FILLS: &str = "Lemma 1.4: if a knot K binds pi_1(M) then K fills up M; the converse holds whenever M satisfies the strong bounded Kneser conjecture (SBKC).";
pub const CITE_SBKC: &str = "SBKC remark: a genus g handlebody satisfies the strong bounded Kneser conjecture, so for handlebodies filling up and binding coincide.";
pub const NOTE_BOUNDARY_REALIZATION: &str = "note: the incompressibility statement concerns a curve realized on the boundary of the handlebody; realizability of an arbitrary interior class on the boundary is not asserted here.";

/// A genus-`g` handlebody with a fixed one-vertex spine, `g >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HandlebodyContext {
    genus: Rank,
}

impl HandlebodyContext {
    pub fn new(genus: u32) -> Result<HandlebodyContext> {
        Ok(HandlebodyContext {
            genus: Rank::new(genus)?,
        })
    }

    pub fn genus(&self) -> Rank {
        self.genus
    }
}

/// All three topological flags for one knot class, with the licensing
/// citations. For a handlebody the flags coincide by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopologicalVerdict {
    pub word: String,
    pub genus: u32,
    pub binds: bool,
    pub fills_up: bool,
    pub boundary_complement_incompressible: bool,
    pub citations: Vec<String>,
    pub note: String,
}

impl TopologicalVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Whether the knot class fills up the handlebody: every homotopic
/// representative has irreducible, boundary-irreducible exterior.
pub fn fills_up(
    ctx: &HandlebodyContext,
    word: &Word,
    limits: &Limits,
) -> Result<(bool, Vec<String>)> {
    let verdict = decide(word, ctx.genus, limits)?;
    Ok((
        verdict.binds(),
        vec![CITE_FILLS.to_string(), CITE_SBKC.to_string()],
    ))
}

/// Whether the boundary minus the (boundary-realized) knot is
/// incompressible in the handlebody.
pub fn boundary_complement_incompressible(
    ctx: &HandlebodyContext,
    word: &Word,
    limits: &Limits,
) -> Result<(bool, Vec<String>)> {
    let verdict = decide(word, ctx.genus, limits)?;
    Ok((
        verdict.binds(),
        vec![
            CITE_INCOMPRESSIBLE.to_string(),
            NOTE_BOUNDARY_REALIZATION.to_string(),
        ],
    ))
}

/// One decision fanned out into all three flags, on the conjugacy-class
/// representative so that conjugate inputs produce identical reports.
pub fn report(ctx: &HandlebodyContext, word: &Word, limits: &Limits) -> Result<TopologicalVerdict> {
    let (core, _) = CyclicWord::reduce(word, ctx.genus)?;
    let verdict: Verdict = decide(word, ctx.genus, limits)?;
    let binds = verdict.binds();
    Ok(TopologicalVerdict {
        word: core.to_string(),
        genus: ctx.genus.get(),
        binds,
        fills_up: binds,
        boundary_complement_incompressible: binds,
        citations: vec![
            CITE_INCOMPRESSIBLE.to_string(),
            CITE_FILLS.to_string(),
            CITE_SBKC.to_string(),
        ],
        note: NOTE_BOUNDARY_REALIZATION.to_string(),
    })
}
