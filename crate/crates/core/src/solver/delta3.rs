//! Δᴵ = 3 pipeline: transformed graph, path collection, claim dispatch.

use super::collection::{build_collection, PathCollection, PathKind};
use super::{fallback, finish, rec, structural_refutation, templates, SolveError};
use crate::cert::Certificate;
use crate::graph::{is_connected, Graph, Vertex};
use crate::split::{delta_i, find_star_split, SplitPartition};
use crate::structure::{restricted_subgraph_without, structure_report, PieceKind, RestrictedSubgraph, StructureReport};

#[derive(Debug, Clone)]
pub struct V3Context {
    pub v: Vertex,
    pub nv: [Vertex; 3],
    /// vertices of G' in ascending order (G' is G minus `nv`)
    pub gprime: Vec<Vertex>,
    pub hprime: RestrictedSubgraph,
    pub collection: PathCollection,
}

pub fn build_v3_context(g: &Graph, p: &SplitPartition) -> Result<V3Context, SolveError> {
    let v = p
        .clique
        .iter()
        .copied()
        .filter(|&w| p.d_i(g, w) == 3)
        .min()
        .ok_or(SolveError::NoV3Vertex)?;
    let nv_vec: Vec<Vertex> = p.n_i(g, v).collect();
    let nv = [nv_vec[0], nv_vec[1], nv_vec[2]];
    let gprime = g.vertices().filter(|u| !nv.contains(u)).collect();
    let hprime = restricted_subgraph_without(g, p, &nv);
    let collection = build_collection(g, p, &nv)?;
    collection.check(g, p).map_err(SolveError::InvalidConstruction)?;
    Ok(V3Context { v, nv, gprime, hprime, collection })
}

/// Which explicit construction family applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Lemma7 { v_on_cycle: bool },
    Claim5,
    Claim6,
    Claim7,
    Claim8,
    Claim10,
    Claim12,
    Claim13,
    Claim14,
    Claim16,
    Claim17,
    Claim18,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::Lemma7 { .. } => "Lemma7",
            Regime::Claim5 => "Claim5",
            Regime::Claim6 => "Claim6",
            Regime::Claim7 => "Claim7",
            Regime::Claim8 => "Claim8",
            Regime::Claim10 => "Claim10",
            Regime::Claim12 => "Claim12",
            Regime::Claim13 => "Claim13",
            Regime::Claim14 => "Claim14",
            Regime::Claim16 => "Claim16",
            Regime::Claim17 => "Claim17",
            Regime::Claim18 => "Claim18",
        }
    }

    /// Regimes for which no explicit construction is given at all.
    pub fn omitted(self) -> bool {
        matches!(self, Regime::Claim16 | Regime::Claim17 | Regime::Claim18)
    }
}

fn violated(claim: &str) -> SolveError {
    SolveError::StructuralClaimViolated(claim.to_string())
}

/// Bucket profile of the collection mapped onto the claim structure.
pub fn classify(ctx: &V3Context, report: &StructureReport) -> Result<Regime, SolveError> {
    if let Some(c) = report.pieces.iter().find(|c| c.kind == PieceKind::Cycle && c.is_short) {
        return Ok(Regime::Lemma7 { v_on_cycle: c.vertices.contains(&ctx.v) });
    }
    let col = &ctx.collection;
    let sizes: Vec<usize> = col.paths.iter().map(|s| s.len()).collect();
    let count = |lo: usize, hi: usize| sizes.iter().filter(|&&s| s >= lo && s <= hi).count();
    if count(12, usize::MAX) > 0 {
        return Err(violated("Claim2"));
    }
    let big = count(8, 11);
    if big > 0 {
        if big > 1 || count(4, 7) > 0 {
            return Err(violated("Claim4"));
        }
        let s = *sizes.iter().max().unwrap();
        return Ok(match s {
            11 => Regime::Claim5,
            10 => Regime::Claim6,
            9 => Regime::Claim7,
            _ => Regime::Claim8,
        });
    }
    let mid = count(6, 7);
    let small = count(4, 5);
    match mid {
        0 => match small {
            0 => Ok(Regime::Claim18),
            1 => Ok(Regime::Claim17),
            2 => Ok(Regime::Claim16),
            _ => Err(violated("Claim15")),
        },
        1 => match small {
            0 if count(7, 7) == 1 => Ok(Regime::Claim13),
            0 => Ok(Regime::Claim14),
            1 => Ok(Regime::Claim12),
            _ => Err(violated("Claim11")),
        },
        2 => Ok(Regime::Claim10),
        _ => Err(violated("Claim9")),
    }
}

/// Short cycles of H number at most one, with at most eight vertices.
fn lemma6(report: &StructureReport) -> Result<(), SolveError> {
    let cycles: Vec<_> = report.pieces.iter().filter(|c| c.kind == PieceKind::Cycle && c.is_short).collect();
    if cycles.len() > 1 || cycles.iter().any(|c| c.vertices.len() > 8) {
        return Err(violated("Lemma6"));
    }
    Ok(())
}

/// Where the pipeline lands before any path is built.
#[derive(Debug, Clone)]
pub enum Stage {
    Refuted(Certificate),
    Spanning(Vec<Vertex>),
    Dispatch { ctx: Box<V3Context>, report: StructureReport, regime: Regime },
}

/// Runs the precondition, refutation, Lemma 6 and claim checks, stopping at the regime.
pub fn analyse_delta3(g: &Graph, p: &SplitPartition) -> Result<Stage, SolveError> {
    if !is_connected(g) {
        return Err(SolveError::PreconditionViolated("graph is disconnected"));
    }
    if delta_i(p, g) != 3 {
        return Err(SolveError::PreconditionViolated("Δᴵ must be 3"));
    }
    if !StructureReport::size_premise(p) {
        return Err(SolveError::PreconditionViolated("needs |K| ≥ |I|-1 ≥ 8"));
    }
    if find_star_split(g, p, 4).is_some() {
        return Err(SolveError::PreconditionViolated("graph contains an induced K1,4"));
    }
    let report = structure_report(g, p)?;
    if let Some(c) = structural_refutation(g, &report, "PropertyA") {
        return Ok(Stage::Refuted(c));
    }
    lemma6(&report)?;
    // a piece of H covering everything is already a path
    if let Some(piece) = report.pieces.iter().find(|c| c.vertices.len() == g.n()) {
        return Ok(Stage::Spanning(piece.vertices.clone()));
    }
    let ctx = build_v3_context(g, p)?;
    let regime = classify(&ctx, &report)?;
    Ok(Stage::Dispatch { ctx: Box::new(ctx), report, regime })
}

pub fn solve_delta3(g: &Graph, p: &SplitPartition) -> Result<Certificate, SolveError> {
    let (ctx, report, regime) = match analyse_delta3(g, p)? {
        Stage::Refuted(c) => return Ok(c),
        Stage::Spanning(path) => return finish(g, path, vec![rec("PropertyA", "SpanningPiece")]),
        Stage::Dispatch { ctx, report, regime } => (ctx, report, regime),
    };
    if !regime.omitted() {
        if let Some((path, case)) = templates::construct(g, p, &ctx, &report, regime) {
            return finish(g, path, vec![rec(regime.label(), &case)]);
        }
    }
    let case = templates::case_label(g, p, &ctx, &report, regime);
    let path = fallback::guided_search(&ctx, g, p)?;
    finish(g, path, vec![rec(regime.label(), &case), rec("Fallback", regime.label())])
}

/// Number of I-K paths in the collection.
pub fn ik_count(col: &PathCollection) -> usize {
    col.kinds.iter().filter(|&&k| k == PathKind::IK).count()
}
