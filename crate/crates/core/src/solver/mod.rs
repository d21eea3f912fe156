//! Hamiltonian path solver for K1,4-free split graphs.

pub mod collection;
pub mod delta3;
pub mod fallback;
mod rows;
pub mod small_i;
pub mod templates;

use crate::cert::{validate_path, Certificate, TraceRecord, Witness};
use crate::graph::{component_representatives, is_2connected, is_connected, Graph, StarWitness, Vertex};
use crate::split::{delta_i, find_star_split, split_partition, NotSplit, SplitPartition};
use crate::structure::{structure_report, StructureError, StructureReport};
use collection::{build_collection, CollectionError, PathKind};
use small_i::{Mode, SmallIError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    NotSplit(#[from] NotSplit),
    #[error("induced K1,{} centred at {} and |I| above the small-I threshold", .0.leaves.len(), .0.center)]
    SolverScopeExceeded(StarWitness),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("stage 2 found no pair of path ends for vertex {0}")]
    InternalStage2Stuck(Vertex),
    #[error("structural claim violated: {0}")]
    StructuralClaimViolated(String),
    #[error("guided search exhausted without a path")]
    SearchExhausted,
    #[error(transparent)]
    SmallI(#[from] SmallIError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("no clique vertex with three independent neighbours")]
    NoV3Vertex,
    #[error("constructed sequence is not a Hamiltonian path ({0})")]
    InvalidConstruction(String),
}

impl From<CollectionError> for SolveError {
    fn from(e: CollectionError) -> Self {
        match e {
            CollectionError::Structure(s) => SolveError::Structure(s),
            CollectionError::Stage2Stuck(v) => SolveError::InternalStage2Stuck(v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub small_i_threshold: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { small_i_threshold: small_i::DEFAULT_THRESHOLD }
    }
}

pub(crate) fn rec(claim: &str, case: &str) -> TraceRecord {
    TraceRecord::new(claim, case)
}

pub(crate) fn finish(g: &Graph, path: Vec<Vertex>, trace: Vec<TraceRecord>) -> Result<Certificate, SolveError> {
    validate_path(g, &path).map_err(|e| SolveError::InvalidConstruction(e.to_string()))?;
    Ok(Certificate::yes(path, trace))
}

pub fn solve(g: &Graph) -> Result<Certificate, SolveError> {
    solve_with(g, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, opts: &SolveOptions) -> Result<Certificate, SolveError> {
    if !is_connected(g) {
        return Ok(Certificate::no(
            Witness::Disconnected(component_representatives(g)),
            vec![rec("Lemma4", "Disconnected")],
        ));
    }
    let p = split_partition(g)?;
    if g.n() == 1 {
        return finish(g, vec![1], vec![rec("Trivial", "Single")]);
    }
    if p.i_len() > p.k_len() + 1 {
        return Ok(Certificate::no(Witness::CutSet(p.clique.clone()), vec![rec("Lemma4", "CutSetK")]));
    }
    // a clique vertex with no I-neighbour can join I instead
    if let Some(x) = p.clique.iter().copied().find(|&x| p.d_i(g, x) == 0).filter(|_| p.i_len() >= p.k_len()) {
        let cut: Vec<Vertex> = p.clique.iter().copied().filter(|&w| w != x).collect();
        return Ok(Certificate::no(Witness::CutSet(cut), vec![rec("Lemma4", "CutSetK")]));
    }
    if let Some(star) = find_star_split(g, &p, 4) {
        if p.i_len() <= opts.small_i_threshold {
            return small_i_dp_with(g, &p, opts.small_i_threshold);
        }
        let wider = find_star_split(g, &p, 5).unwrap_or(star);
        return Err(SolveError::SolverScopeExceeded(wider));
    }
    let d = delta_i(&p, g);
    if d == 1 {
        return solve_delta1(g, &p);
    }
    if find_star_split(g, &p, 3).is_none() {
        return solve_k13(g, &p);
    }
    match d {
        2 => solve_delta2(g, &p),
        3 if StructureReport::size_premise(&p) => solve_delta3(g, &p),
        _ => small_i_dp_with(g, &p, opts.small_i_threshold),
    }
}

fn degree_one_i(g: &Graph, p: &SplitPartition) -> Vec<Vertex> {
    p.independent.iter().copied().filter(|&u| g.degree(u) == 1).collect()
}

fn two_smallest_k(g: &Graph, u: Vertex) -> (Vertex, Vertex) {
    let nb = g.neighbors(u);
    (nb[0], nb[1])
}

/// `(x1, w1, y1, x2, w2, y2, ...)` for independent vertices on private clique pairs, then the rest of K.
fn thread_blocks(g: &Graph, p: &SplitPartition, skip: &[Vertex], reserved: &[Vertex]) -> Vec<Vertex> {
    let mut used = vec![false; g.n() + 1];
    for &r in reserved {
        used[r as usize] = true;
    }
    let mut seq = Vec::new();
    for &w in &p.independent {
        if skip.contains(&w) {
            continue;
        }
        let (x, y) = two_smallest_k(g, w);
        used[x as usize] = true;
        used[y as usize] = true;
        seq.extend([x, w, y]);
    }
    seq.extend(p.clique.iter().copied().filter(|&k| !used[k as usize]));
    seq
}

/// Hamiltonian cycle of a K1,3-free split graph; `None` when not 2-connected.
pub fn hc_k13(g: &Graph, p: &SplitPartition) -> Result<Option<Vec<Vertex>>, SolveError> {
    if g.n() < 3 {
        return Err(SolveError::PreconditionViolated("cycles need at least 3 vertices"));
    }
    if find_star_split(g, p, 3).is_some() {
        return Err(SolveError::PreconditionViolated("graph contains an induced K1,3"));
    }
    if !is_2connected(g).unwrap_or(false) {
        return Ok(None);
    }
    let cycle = if delta_i(p, g) <= 1 {
        thread_blocks(g, p, &[], &[])
    } else {
        match small_i::search(g, p, Mode::Cycle)? {
            Some(c) => c,
            None => return Err(SolveError::PreconditionViolated("2-connected K1,3-free graph without a cycle")),
        }
    };
    if !crate::graph::is_hamiltonian_cycle(g, &cycle) {
        return Err(SolveError::InvalidConstruction("threaded cycle".into()));
    }
    Ok(Some(cycle))
}

pub fn solve_k13(g: &Graph, p: &SplitPartition) -> Result<Certificate, SolveError> {
    const T: &str = "Theorem2";
    if !is_connected(g) {
        return Err(SolveError::PreconditionViolated("graph is disconnected"));
    }
    if find_star_split(g, p, 3).is_some() {
        return Err(SolveError::PreconditionViolated("graph contains an induced K1,3"));
    }
    let n = g.n();
    if n <= 2 {
        let mut path = p.clique.clone();
        path.extend(&p.independent);
        return finish(g, path, vec![rec(T, "Small")]);
    }
    let ones = degree_one_i(g, p);
    match ones.len() {
        0 => {
            let c = hc_k13(g, p)?.ok_or(SolveError::PreconditionViolated("no cycle although min I-degree is 2"))?;
            finish(g, c, vec![rec(T, "Case1")])
        }
        1 => {
            let u = ones[0];
            let up = g.neighbors(u)[0];
            let keep: Vec<Vertex> = g.vertices().filter(|&v| v != u).collect();
            if keep.len() < 3 {
                let rest: Vec<Vertex> = keep.iter().copied().filter(|&v| v != up).collect();
                let mut path = vec![u, up];
                path.extend(rest);
                return finish(g, path, vec![rec(T, "Case2")]);
            }
            let sub = g.induced(&keep);
            let map = |v: Vertex| keep[v as usize - 1];
            let back = |v: Vertex| keep.iter().position(|&x| x == v).unwrap() as Vertex + 1;
            let sk: Vec<Vertex> = p.clique.iter().map(|&v| back(v)).collect();
            let si: Vec<Vertex> = p.independent.iter().filter(|&&v| v != u).map(|&v| back(v)).collect();
            let sp = SplitPartition::from_sets(sub.n(), &sk, &si);
            let c = hc_k13(&sub, &sp)?.ok_or(SolveError::PreconditionViolated("G - u is not 2-connected"))?;
            let c: Vec<Vertex> = c.into_iter().map(map).collect();
            let at = c.iter().position(|&x| x == up).unwrap();
            let mut path = vec![u];
            path.extend((0..c.len()).map(|i| c[(at + i) % c.len()]));
            finish(g, path, vec![rec(T, "Case2")])
        }
        2 => {
            if delta_i(p, g) >= 2 {
                let path = small_i::search(g, p, Mode::Path)?
                    .ok_or(SolveError::PreconditionViolated("two pendant vertices but no path"))?;
                return finish(g, path, vec![rec(T, "Case3")]);
            }
            finish(g, threaded_path(g, p, &ones), vec![rec(T, "Case3")])
        }
        _ => Ok(Certificate::no(Witness::TooManyDegreeOne(ones), vec![rec(T, "TooManyDegreeOne")])),
    }
}

/// `(u, u', x1, w1, y1, ..., z..., v', v)` for Δᴵ ≤ 1 and up to two pendant vertices.
fn threaded_path(g: &Graph, p: &SplitPartition, ones: &[Vertex]) -> Vec<Vertex> {
    let anchors: Vec<Vertex> = ones.iter().map(|&u| g.neighbors(u)[0]).collect();
    let middle = thread_blocks(g, p, ones, &anchors);
    let mut path = Vec::with_capacity(g.n());
    if let Some(&u) = ones.first() {
        path.extend([u, anchors[0]]);
    }
    path.extend(middle);
    if ones.len() == 2 {
        path.extend([anchors[1], ones[1]]);
    }
    path
}

pub fn solve_delta1(g: &Graph, p: &SplitPartition) -> Result<Certificate, SolveError> {
    const T: &str = "Theorem3";
    if !is_connected(g) {
        return Err(SolveError::PreconditionViolated("graph is disconnected"));
    }
    if delta_i(p, g) != 1 {
        return Err(SolveError::PreconditionViolated("Δᴵ must be 1"));
    }
    let ones = degree_one_i(g, p);
    if ones.len() >= 3 {
        return Ok(Certificate::no(Witness::TooManyDegreeOne(ones), vec![rec(T, "TooManyDegreeOne")]));
    }
    finish(g, threaded_path(g, p, &ones), vec![rec(T, "Threading")])
}

/// NO certificate when H has a short I-I path or more than two endpoint-forcing pieces.
pub(crate) fn structural_refutation(g: &Graph, r: &StructureReport, claim: &str) -> Option<Certificate> {
    if let Some(ii) = r.first_short_ii() {
        return Some(Certificate::no(Witness::ShortIIPath(ii.vertices.clone()), vec![rec(claim, "ShortIIPath")]));
    }
    let forcing = r.endpoint_forcing();
    if forcing.len() > 2 {
        let _ = g;
        return Some(Certificate::no(
            Witness::TooManyIKPaths(forcing.iter().map(|p| p.vertices.clone()).collect()),
            vec![rec(claim, "TooManyIKPaths")],
        ));
    }
    None
}

pub fn solve_delta2(g: &Graph, p: &SplitPartition) -> Result<Certificate, SolveError> {
    const T: &str = "Theorem4";
    if !is_connected(g) {
        return Err(SolveError::PreconditionViolated("graph is disconnected"));
    }
    if delta_i(p, g) != 2 {
        return Err(SolveError::PreconditionViolated("Δᴵ must be 2"));
    }
    let r = structure_report(g, p)?;
    if let Some(c) = structural_refutation(g, &r, T) {
        return Ok(c);
    }
    let col = build_collection(g, p, &[])?;
    col.check(g, p).map_err(SolveError::InvalidConstruction)?;
    finish(g, concatenate(&col.paths, &col.kinds), vec![rec(T, "Construct")])
}

/// I-K paths at the two ends, clique-ended paths in between.
fn concatenate(paths: &[Vec<Vertex>], kinds: &[PathKind]) -> Vec<Vertex> {
    let iks: Vec<&Vec<Vertex>> = paths.iter().zip(kinds).filter(|(_, &k)| k != PathKind::KK).map(|(p, _)| p).collect();
    let mut seq = Vec::new();
    if let Some(first) = iks.first() {
        seq.extend(first.iter().rev());
    }
    for (p, &k) in paths.iter().zip(kinds) {
        if k == PathKind::KK {
            seq.extend(p);
        }
    }
    for p in iks.iter().skip(1) {
        seq.extend(p.iter());
    }
    seq
}

pub fn solve_delta3(g: &Graph, p: &SplitPartition) -> Result<Certificate, SolveError> {
    delta3::solve_delta3(g, p)
}

pub fn small_i_dp(g: &Graph, p: &SplitPartition) -> Result<Certificate, SolveError> {
    small_i_dp_with(g, p, small_i::DEFAULT_THRESHOLD)
}

pub fn small_i_dp_with(g: &Graph, p: &SplitPartition, threshold: usize) -> Result<Certificate, SolveError> {
    const T: &str = small_i::TRACE_CLAIM;
    if p.i_len() > threshold {
        return Err(SmallIError::IToLarge(p.i_len(), threshold).into());
    }
    if !is_connected(g) {
        return Ok(Certificate::no(Witness::Disconnected(component_representatives(g)), vec![rec(T, "Disconnected")]));
    }
    if p.i_len() > p.k_len() + 1 {
        return Ok(Certificate::no(Witness::CutSet(p.clique.clone()), vec![rec(T, "CutSetK")]));
    }
    let ones = degree_one_i(g, p);
    if ones.len() >= 3 && g.n() > 2 {
        return Ok(Certificate::no(Witness::TooManyDegreeOne(ones), vec![rec(T, "TooManyDegreeOne")]));
    }
    match small_i::search_with(g, p, Mode::Path, threshold, u64::MAX)? {
        Some(path) => finish(g, path, vec![rec(T, "Search")]),
        None => {
            // a cut set from H, when one exists, is a cheaper witness than exhaustion
            if let Ok(r) = structure_report(g, p) {
                if let Some(ii) = r.first_short_ii() {
                    if let Ok(s) = crate::structure::refutation_from_short_ii(g, ii) {
                        return Ok(Certificate::no(Witness::CutSet(s), vec![rec(T, "CutSetShortII")]));
                    }
                }
            }
            Ok(Certificate::no(Witness::Exhaustive, vec![rec(T, "Exhaustive")]))
        }
    }
}
