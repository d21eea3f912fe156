//! The restricted bipartite subgraph H and its path/cycle decomposition.

use crate::graph::{components_after_removal, Graph, Vertex};
use crate::split::SplitPartition;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("clique vertex {0} has {1} neighbours in H, so H is not a union of paths and cycles")]
    Branching(Vertex, usize),
    #[error("piece is not a short I-I path")]
    NotShortII,
    #[error("cut set {0:?} does not violate the component bound")]
    NotAViolation(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedSubgraph {
    pub va: Vec<Vertex>,
    pub vb: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub host_n: usize,
    /// adjacency in H, indexed by vertex id
    adj: Vec<Vec<Vertex>>,
    in_va: Vec<bool>,
}

impl RestrictedSubgraph {
    pub fn h_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn in_va(&self, v: Vertex) -> bool {
        self.in_va[v as usize]
    }
}

pub fn restricted_subgraph(g: &Graph, p: &SplitPartition) -> RestrictedSubgraph {
    restricted_subgraph_without(g, p, &[])
}

/// H of `G - removed`.
pub fn restricted_subgraph_without(g: &Graph, p: &SplitPartition, removed: &[Vertex]) -> RestrictedSubgraph {
    let n = g.n();
    let mut gone = vec![false; n + 1];
    for &r in removed {
        gone[r as usize] = true;
    }
    let mut adj = vec![Vec::new(); n + 1];
    let mut in_va = vec![false; n + 1];
    let mut va = Vec::new();
    let mut edges = Vec::new();
    for &u in &p.independent {
        if gone[u as usize] {
            continue;
        }
        let live: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&w| !gone[w as usize]).collect();
        if live.len() > 2 {
            continue;
        }
        va.push(u);
        in_va[u as usize] = true;
        for w in live {
            adj[u as usize].push(w);
            adj[w as usize].push(u);
            edges.push((u, w));
        }
    }
    let mut vb: Vec<Vertex> = p.clique.iter().copied().filter(|&w| !gone[w as usize] && !adj[w as usize].is_empty()).collect();
    vb.sort_unstable();
    RestrictedSubgraph { va, vb, edges, host_n: n, adj, in_va }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum PieceKind {
    IIPath,
    IKPath,
    KKPath,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassifiedPiece {
    pub kind: PieceKind,
    pub vertices: Vec<Vertex>,
    pub is_short: bool,
}

impl ClassifiedPiece {
    pub fn min_vertex(&self) -> Vertex {
        *self.vertices.iter().min().expect("pieces are nonempty")
    }
}

pub fn decompose(h: &RestrictedSubgraph) -> Result<Vec<ClassifiedPiece>, StructureError> {
    for &w in &h.vb {
        let d = h.h_neighbors(w).len();
        if d > 2 {
            return Err(StructureError::Branching(w, d));
        }
    }
    let n = h.host_n;
    let mut used = vec![false; n + 1];
    let mut pieces = Vec::new();
    let members: Vec<Vertex> = {
        let mut all: Vec<Vertex> = h.va.iter().chain(h.vb.iter()).copied().collect();
        all.sort_unstable();
        all
    };
    let walk = |start: Vertex, used: &mut Vec<bool>| -> Vec<Vertex> {
        let mut seq = vec![start];
        used[start as usize] = true;
        let mut cur = start;
        loop {
            let next = h.h_neighbors(cur).iter().copied().filter(|&x| !used[x as usize]).min();
            match next {
                Some(x) => {
                    used[x as usize] = true;
                    seq.push(x);
                    cur = x;
                }
                None => return seq,
            }
        }
    };
    // paths first: start at every endpoint (H-degree at most 1)
    for &v in &members {
        if used[v as usize] || h.h_neighbors(v).len() > 1 {
            continue;
        }
        let mut seq = walk(v, &mut used);
        if seq[seq.len() - 1] < seq[0] {
            seq.reverse();
        }
        let a = h.in_va(seq[0]);
        let b = h.in_va(seq[seq.len() - 1]);
        let kind = match (a, b) {
            (true, true) => PieceKind::IIPath,
            (false, false) => PieceKind::KKPath,
            _ => PieceKind::IKPath,
        };
        let is_short = seq.len() < n;
        pieces.push(ClassifiedPiece { kind, vertices: seq, is_short });
    }
    // what is left lies on cycles
    for &v in &members {
        if used[v as usize] {
            continue;
        }
        let seq = walk(v, &mut used);
        debug_assert!(seq.len() % 2 == 0 && seq.len() >= 4);
        let is_short = seq.len() < n;
        pieces.push(ClassifiedPiece { kind: PieceKind::Cycle, vertices: seq, is_short });
    }
    pieces.sort_by_key(|p| p.min_vertex());
    Ok(pieces)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub pieces: Vec<ClassifiedPiece>,
    pub short_cycles: usize,
    pub short_ii_paths: usize,
    pub ik_paths: usize,
    pub property_a: bool,
}

impl StructureReport {
    pub fn size_premise(p: &SplitPartition) -> bool {
        let (k, i) = (p.k_len(), p.i_len());
        i >= 9 && k + 1 >= i
    }

    pub fn first_short_ii(&self) -> Option<&ClassifiedPiece> {
        self.pieces.iter().find(|p| p.kind == PieceKind::IIPath && p.is_short)
    }

    /// I-K paths and short cycles; each forces its own path endpoint.
    pub fn endpoint_forcing(&self) -> Vec<&ClassifiedPiece> {
        self.pieces
            .iter()
            .filter(|p| p.kind == PieceKind::IKPath || (p.kind == PieceKind::Cycle && p.is_short))
            .collect()
    }
}

pub fn structure_report(g: &Graph, p: &SplitPartition) -> Result<StructureReport, StructureError> {
    let h = restricted_subgraph(g, p);
    let pieces = decompose(&h)?;
    let short_cycles = pieces.iter().filter(|x| x.kind == PieceKind::Cycle && x.is_short).count();
    let short_ii_paths = pieces.iter().filter(|x| x.kind == PieceKind::IIPath && x.is_short).count();
    let ik_paths = pieces.iter().filter(|x| x.kind == PieceKind::IKPath).count();
    let property_a = StructureReport::size_premise(p) && short_ii_paths == 0 && ik_paths + short_cycles <= 2;
    Ok(StructureReport { pieces, short_cycles, short_ii_paths, ik_paths, property_a })
}

/// Cycles of H, allowing clique vertices with more than two H-neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleCensus {
    /// components of H holding exactly one cycle, as that cycle
    pub cycles: Vec<Vec<Vertex>>,
    /// components holding two or more cycles
    pub tangled: usize,
}

pub fn cycle_census(h: &RestrictedSubgraph) -> CycleCensus {
    let n = h.host_n;
    let mut comp = vec![usize::MAX; n + 1];
    let mut out = CycleCensus::default();
    let members: Vec<Vertex> = h.va.iter().chain(h.vb.iter()).copied().collect();
    for &start in &members {
        if comp[start as usize] != usize::MAX {
            continue;
        }
        let mut verts = vec![start];
        comp[start as usize] = start as usize;
        let mut i = 0;
        while i < verts.len() {
            for &y in h.h_neighbors(verts[i]) {
                if comp[y as usize] == usize::MAX {
                    comp[y as usize] = start as usize;
                    verts.push(y);
                }
            }
            i += 1;
        }
        let edges: usize = verts.iter().map(|&x| h.h_neighbors(x).len()).sum::<usize>() / 2;
        match (edges + 1).saturating_sub(verts.len()) {
            0 => {}
            1 => {
                // peel pendant trees off the unique cycle
                let mut deg: Vec<usize> = vec![0; n + 1];
                for &x in &verts {
                    deg[x as usize] = h.h_neighbors(x).len();
                }
                let mut stack: Vec<Vertex> = verts.iter().copied().filter(|&x| deg[x as usize] == 1).collect();
                while let Some(x) = stack.pop() {
                    deg[x as usize] = 0;
                    for &y in h.h_neighbors(x) {
                        if deg[y as usize] > 0 {
                            deg[y as usize] -= 1;
                            if deg[y as usize] == 1 {
                                stack.push(y);
                            }
                        }
                    }
                }
                let first = *verts.iter().filter(|&&x| deg[x as usize] >= 2).min().unwrap();
                let mut cyc = vec![first];
                let mut prev = 0;
                let mut cur = first;
                loop {
                    let next = h
                        .h_neighbors(cur)
                        .iter()
                        .copied()
                        .filter(|&y| deg[y as usize] >= 2 && y != prev)
                        .min()
                        .unwrap();
                    if next == first {
                        break;
                    }
                    cyc.push(next);
                    prev = cur;
                    cur = next;
                }
                out.cycles.push(cyc);
            }
            _ => out.tangled += 1,
        }
    }
    out
}

/// Cut set `V(P) ∩ K` of a short I-I path, checked to break the component bound.
pub fn refutation_from_short_ii(g: &Graph, piece: &ClassifiedPiece) -> Result<Vec<Vertex>, StructureError> {
    if piece.kind != PieceKind::IIPath || !piece.is_short {
        return Err(StructureError::NotShortII);
    }
    // I and K alternate starting from I
    let mut s: Vec<Vertex> = piece.vertices.iter().skip(1).step_by(2).copied().collect();
    s.sort_unstable();
    if components_after_removal(g, &s) > s.len() + 1 {
        Ok(s)
    } else {
        Err(StructureError::NotAViolation(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::split::split_partition;

    #[test]
    fn kk_path_example() {
        let g = build_graph(5, &[(1, 2), (1, 3), (2, 3), (4, 1), (4, 2), (5, 2), (5, 3)]).unwrap();
        let p = SplitPartition::from_sets(5, &[1, 2, 3], &[4, 5]);
        let h = restricted_subgraph(&g, &p);
        assert_eq!(h.va, vec![4, 5]);
        assert_eq!(h.vb, vec![1, 2, 3]);
        assert_eq!(h.edges.len(), 4);
        let pieces = decompose(&h).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].kind, PieceKind::KKPath);
        assert_eq!(pieces[0].vertices, vec![1, 4, 2, 5, 3]);
    }

    #[test]
    fn short_ii_example() {
        let g = build_graph(6, &[(1, 2), (1, 6), (2, 6), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!(p.clique, vec![1, 2, 6]);
        let r = structure_report(&g, &p).unwrap();
        let ii = r.first_short_ii().unwrap();
        assert_eq!(ii.vertices, vec![3, 1, 4]);
        assert!(ii.is_short);
        assert!(!r.property_a);
        assert_eq!(r.short_ii_paths, 1);
        assert_eq!(refutation_from_short_ii(&g, ii).unwrap(), vec![1]);
    }

    #[test]
    fn isolated_i_vertex_is_ii_path() {
        let g = build_graph(3, &[(1, 2)]).unwrap();
        let p = SplitPartition::from_sets(3, &[1, 2], &[3]);
        let r = structure_report(&g, &p).unwrap();
        let ii = r.first_short_ii().unwrap();
        assert_eq!(ii.vertices, vec![3]);
        assert_eq!(refutation_from_short_ii(&g, ii).unwrap(), Vec::<Vertex>::new());
    }

    #[test]
    fn degree_three_vertex_excluded() {
        let g = build_graph(4, &[(1, 2), (1, 3), (2, 3), (4, 1), (4, 2), (4, 3)]).unwrap();
        let p = SplitPartition::from_sets(4, &[1, 2, 3], &[4]);
        assert!(restricted_subgraph(&g, &p).va.is_empty());
    }

    #[test]
    fn census_tolerates_branching() {
        let k = [(1, 2), (1, 3), (2, 3)];
        let mut e = k.to_vec();
        e.extend([(4, 1), (4, 2), (5, 1), (5, 2), (6, 1)]);
        let g = build_graph(6, &e).unwrap();
        let p = SplitPartition::from_sets(6, &[1, 2, 3], &[4, 5, 6]);
        let h = restricted_subgraph(&g, &p);
        assert!(decompose(&h).is_err());
        assert_eq!(cycle_census(&h), CycleCensus { cycles: vec![vec![1, 4, 2, 5]], tangled: 0 });
        let mut e = k.to_vec();
        e.extend([(4, 1), (4, 2), (5, 1), (5, 2), (6, 1), (6, 2)]);
        let g = build_graph(6, &e).unwrap();
        assert_eq!(cycle_census(&restricted_subgraph(&g, &p)).tangled, 1);
    }
}
