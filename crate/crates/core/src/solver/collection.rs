//! Vertex-disjoint path collections built from the pieces of H.

use crate::graph::{Graph, Vertex};
use crate::split::SplitPartition;
use crate::structure::{decompose, restricted_subgraph_without, PieceKind, StructureError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollectionError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("no pair of path ends available for vertex {0}")]
    Stage2Stuck(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathKind {
    /// both ends in K (singletons included)
    KK,
    /// K end first, I end last
    IK,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCollection {
    /// ordered by first vertex
    pub paths: Vec<Vec<Vertex>>,
    pub kinds: Vec<PathKind>,
    /// vertices of the host graph left out of the ground graph
    pub removed: Vec<Vertex>,
}

impl PathCollection {
    /// Size -> indices into `paths`.
    pub fn buckets(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut b: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            b.entry(p.len()).or_default().push(i);
        }
        b
    }

    pub fn bucket(&self, size: usize) -> Vec<usize> {
        (0..self.paths.len()).filter(|&i| self.paths[i].len() == size).collect()
    }

    pub fn count_at_least(&self, size: usize) -> usize {
        self.paths.iter().filter(|p| p.len() >= size).count()
    }

    /// Disjointness, cover of `G - removed`, alternation, kinds and parities.
    pub fn check(&self, g: &Graph, p: &SplitPartition) -> Result<(), String> {
        let mut seen = vec![false; g.n() + 1];
        for &r in &self.removed {
            seen[r as usize] = true;
        }
        for (path, &kind) in self.paths.iter().zip(&self.kinds) {
            for &v in path {
                if seen[v as usize] {
                    return Err(format!("vertex {v} covered twice"));
                }
                seen[v as usize] = true;
            }
            for w in path.windows(2) {
                if p.in_k(w[0]) == p.in_k(w[1]) || !g.has_edge(w[0], w[1]) {
                    return Err(format!("bad step {} {}", w[0], w[1]));
                }
            }
            let (a, b) = (p.in_k(path[0]), p.in_k(path[path.len() - 1]));
            let ok = match kind {
                PathKind::KK => a && b && path.len() % 2 == 1,
                PathKind::IK => a && !b && path.len() % 2 == 0,
                PathKind::II => !a && !b && path.len() % 2 == 1,
            };
            if !ok {
                return Err(format!("path {path:?} does not match kind {kind:?}"));
            }
        }
        if let Some(v) = g.vertices().find(|&v| !seen[v as usize]) {
            return Err(format!("vertex {v} not covered"));
        }
        Ok(())
    }
}

/// Pieces of H (for `G - removed`), then unused clique vertices as singletons,
/// then every remaining independent vertex glued between two path ends.
pub fn build_collection(g: &Graph, p: &SplitPartition, removed: &[Vertex]) -> Result<PathCollection, CollectionError> {
    let n = g.n();
    let h = restricted_subgraph_without(g, p, removed);
    let pieces = decompose(&h)?;
    let mut gone = vec![false; n + 1];
    for &r in removed {
        gone[r as usize] = true;
    }
    // path structure as neighbour pointers, path identity by union-find
    let mut link = vec![[0 as Vertex; 2]; n + 1];
    let mut member = vec![false; n + 1];
    let mut parent: Vec<Vertex> = (0..=n as Vertex).collect();
    let mut ends: Vec<[Vertex; 2]> = vec![[0; 2]; n + 1];
    fn find(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    fn connect(link: &mut [[Vertex; 2]], a: Vertex, b: Vertex) {
        for (x, y) in [(a, b), (b, a)] {
            let slot = if link[x as usize][0] == 0 { 0 } else { 1 };
            link[x as usize][slot] = y;
        }
    }
    for piece in &pieces {
        let mut seq = piece.vertices.clone();
        if piece.kind == PieceKind::Cycle {
            // open at the smallest clique vertex, dropping its edge back to the I side
            let pos = (0..seq.len()).filter(|&i| p.in_k(seq[i])).min_by_key(|&i| seq[i]).unwrap();
            seq.rotate_left(pos);
            if p.in_k(seq[seq.len() - 1]) {
                seq[1..].reverse();
            }
        }
        for &v in &seq {
            member[v as usize] = true;
        }
        for w in seq.windows(2) {
            connect(&mut link, w[0], w[1]);
        }
        let root = seq[0];
        for &v in &seq {
            parent[v as usize] = root;
        }
        ends[root as usize] = [seq[0], seq[seq.len() - 1]];
    }
    for &w in &p.clique {
        if !member[w as usize] && !gone[w as usize] {
            member[w as usize] = true;
            ends[w as usize] = [w, w];
        }
    }
    let is_ik = |ends: &[[Vertex; 2]], root: Vertex| -> bool {
        let [a, b] = ends[root as usize];
        p.in_k(a) != p.in_k(b)
    };
    for &u in &p.independent {
        if gone[u as usize] || member[u as usize] {
            continue;
        }
        // K-ends among u's neighbours, ascending
        let cands: Vec<Vertex> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| {
                if gone[w as usize] {
                    return false;
                }
                let r = find(&mut parent, w);
                let [a, b] = ends[r as usize];
                w == a || w == b
            })
            .collect();
        let mut pick = None;
        'outer: for (i, &a) in cands.iter().enumerate() {
            let ra = find(&mut parent, a);
            for &b in &cands[i + 1..] {
                let rb = find(&mut parent, b);
                if ra != rb && !(is_ik(&ends, ra) && is_ik(&ends, rb)) {
                    pick = Some((a, b, ra, rb));
                    break 'outer;
                }
            }
        }
        let Some((a, b, ra, rb)) = pick else {
            return Err(CollectionError::Stage2Stuck(u));
        };
        let other = |e: [Vertex; 2], x: Vertex| if e[0] == x { e[1] } else { e[0] };
        let ea = other(ends[ra as usize], a);
        let eb = other(ends[rb as usize], b);
        connect(&mut link, a, u);
        connect(&mut link, u, b);
        member[u as usize] = true;
        parent[u as usize] = ra;
        parent[rb as usize] = ra;
        ends[ra as usize] = [ea, eb];
    }
    // read the paths off the link structure
    let mut visited = vec![false; n + 1];
    let mut paths = Vec::new();
    let mut kinds = Vec::new();
    for v in g.vertices() {
        if gone[v as usize] || visited[v as usize] {
            continue;
        }
        let r = find(&mut parent, v);
        let [a, b] = ends[r as usize];
        let mut seq = Vec::new();
        let (mut prev, mut cur) = (0, a);
        loop {
            visited[cur as usize] = true;
            seq.push(cur);
            let next = link[cur as usize].iter().copied().find(|&x| x != 0 && x != prev);
            match next {
                Some(x) => {
                    prev = cur;
                    cur = x;
                }
                None => break,
            }
        }
        debug_assert_eq!(*seq.last().unwrap(), b);
        let kind = match (p.in_k(seq[0]), p.in_k(seq[seq.len() - 1])) {
            (true, true) => PathKind::KK,
            (false, false) => PathKind::II,
            _ => PathKind::IK,
        };
        match kind {
            PathKind::IK if !p.in_k(seq[0]) => seq.reverse(),
            PathKind::KK | PathKind::II if seq[seq.len() - 1] < seq[0] => seq.reverse(),
            _ => {}
        }
        paths.push(seq);
        kinds.push(kind);
    }
    let mut order: Vec<usize> = (0..paths.len()).collect();
    order.sort_by_key(|&i| paths[i][0]);
    let paths: Vec<_> = order.iter().map(|&i| paths[i].clone()).collect();
    let kinds: Vec<_> = order.iter().map(|&i| kinds[i]).collect();
    let mut removed = removed.to_vec();
    removed.sort_unstable();
    Ok(PathCollection { paths, kinds, removed })
}
