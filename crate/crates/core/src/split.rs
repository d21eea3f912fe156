//! Split recognition and the clique/independent-set partition.

use crate::graph::{Graph, StarWitness, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ForbiddenKind {
    C4,
    C5,
    TwoK2,
}

/// Induced C4/C5 (vertices in cycle order) or 2K2 (as `a b c d` with edges ab, cd).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph is not split: induced {kind:?} on {vertices:?}")]
pub struct NotSplit {
    pub kind: ForbiddenKind,
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("vertex {0} is not in the clique side")]
    SNotInClique(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    K,
    I,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    /// ascending ids
    pub clique: Vec<Vertex>,
    /// ascending ids
    pub independent: Vec<Vertex>,
    side: Vec<Side>,
}

impl SplitPartition {
    /// Trusts the caller; use [`SplitPartition::check`] to verify.
    pub fn from_sets(n: usize, clique: &[Vertex], independent: &[Vertex]) -> SplitPartition {
        let mut side = vec![Side::I; n + 1];
        for &k in clique {
            side[k as usize] = Side::K;
        }
        let mut clique = clique.to_vec();
        let mut independent = independent.to_vec();
        clique.sort_unstable();
        independent.sort_unstable();
        SplitPartition { clique, independent, side }
    }

    pub fn side(&self, v: Vertex) -> Side {
        self.side[v as usize]
    }

    pub fn in_k(&self, v: Vertex) -> bool {
        self.side[v as usize] == Side::K
    }

    pub fn in_i(&self, v: Vertex) -> bool {
        self.side[v as usize] == Side::I
    }

    pub fn k_len(&self) -> usize {
        self.clique.len()
    }

    pub fn i_len(&self) -> usize {
        self.independent.len()
    }

    /// d^I(v) for a clique vertex.
    pub fn d_i(&self, g: &Graph, v: Vertex) -> usize {
        g.neighbors(v).iter().filter(|&&w| self.in_i(w)).count()
    }

    pub fn n_i<'a>(&'a self, g: &'a Graph, v: Vertex) -> impl Iterator<Item = Vertex> + 'a {
        g.neighbors(v).iter().copied().filter(move |&w| self.in_i(w))
    }

    /// Clique is complete, the other side edgeless, and no I-vertex sees all of K.
    pub fn check(&self, g: &Graph) -> bool {
        if self.clique.len() + self.independent.len() != g.n() {
            return false;
        }
        let k = self.clique.len();
        for &v in &self.clique {
            let inside = g.neighbors(v).iter().filter(|&&w| self.in_k(w)).count();
            if inside != k - 1 {
                return false;
            }
        }
        for &u in &self.independent {
            if g.neighbors(u).iter().any(|&w| self.in_i(w)) {
                return false;
            }
            if k > 0 && g.degree(u) == k {
                return false;
            }
        }
        true
    }
}

pub fn split_partition(g: &Graph) -> Result<SplitPartition, NotSplit> {
    let n = g.n();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut m = 0;
    for (i, &d) in deg.iter().enumerate() {
        if d >= i {
            m = i + 1;
        }
    }
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return Err(forbidden_witness(g).expect("splittance test failed, so a forbidden subgraph exists"));
    }
    let mut side = vec![Side::I; n + 1];
    for &v in &order[..m] {
        side[v as usize] = Side::K;
    }
    // make the clique maximum: pull in I-vertices that see all of K
    loop {
        let k = side.iter().skip(1).filter(|&&s| s == Side::K).count();
        let full = g.vertices().find(|&u| side[u as usize] == Side::I && g.degree(u) == k && k > 0);
        match full {
            Some(u) => side[u as usize] = Side::K,
            None => break,
        }
    }
    let clique: Vec<Vertex> = g.vertices().filter(|&v| side[v as usize] == Side::K).collect();
    let independent: Vec<Vertex> = g.vertices().filter(|&v| side[v as usize] == Side::I).collect();
    let p = SplitPartition { clique, independent, side };
    debug_assert!(p.check(g));
    Ok(p)
}

/// Lexicographically first induced C4, then C5, then 2K2.
pub fn forbidden_witness(g: &Graph) -> Option<NotSplit> {
    let adj = |a: Vertex, b: Vertex| g.has_edge(a, b);
    // C4: a smallest, a-b-c-d-a
    for a in g.vertices() {
        let na = g.neighbors(a);
        for (i, &b) in na.iter().enumerate() {
            for &d in &na[i + 1..] {
                if b < a || d < a || adj(b, d) {
                    continue;
                }
                for &c in g.neighbors(b) {
                    if c > a && c != d && !adj(a, c) && adj(c, d) {
                        return Some(NotSplit { kind: ForbiddenKind::C4, vertices: vec![a, b, c, d] });
                    }
                }
            }
        }
    }
    // C5: a smallest, a-b-c-d-e-a
    for a in g.vertices() {
        let na = g.neighbors(a);
        for &b in na.iter().filter(|&&b| b > a) {
            for &e in na.iter().filter(|&&e| e > a && e != b && !adj(b, e)) {
                for &c in g.neighbors(b).iter().filter(|&&c| c > a && c != e && !adj(a, c) && !adj(c, e)) {
                    for &d in g.neighbors(c) {
                        if d > a && d != b && adj(d, e) && !adj(d, a) && !adj(d, b) {
                            return Some(NotSplit { kind: ForbiddenKind::C5, vertices: vec![a, b, c, d, e] });
                        }
                    }
                }
            }
        }
    }
    // 2K2: edges ab and cd with no edges between them
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if c == a || c == b || d == a || d == b {
                continue;
            }
            if !adj(a, c) && !adj(a, d) && !adj(b, c) && !adj(b, d) {
                return Some(NotSplit { kind: ForbiddenKind::TwoK2, vertices: vec![a, b, c, d] });
            }
        }
    }
    None
}

impl NotSplit {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let v = &self.vertices;
        if v.iter().any(|&x| !g.contains(x)) {
            return false;
        }
        let mut sorted = v.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != v.len() {
            return false;
        }
        let want = |i: usize, j: usize| -> bool {
            match self.kind {
                ForbiddenKind::C4 | ForbiddenKind::C5 => {
                    let len = v.len();
                    (i + 1) % len == j || (j + 1) % len == i
                }
                ForbiddenKind::TwoK2 => (i, j) == (0, 1) || (i, j) == (2, 3),
            }
        };
        let size = match self.kind {
            ForbiddenKind::C4 | ForbiddenKind::TwoK2 => 4,
            ForbiddenKind::C5 => 5,
        };
        v.len() == size
            && (0..size).all(|i| (i + 1..size).all(|j| g.has_edge(v[i], v[j]) == want(i, j)))
    }
}

pub fn neighborhood_i(p: &SplitPartition, g: &Graph, s: &[Vertex]) -> Result<Vec<Vertex>, SplitError> {
    let mut out = Vec::new();
    for &v in s {
        if !p.in_k(v) {
            return Err(SplitError::SNotInClique(v));
        }
        out.extend(p.n_i(g, v));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn delta_i(p: &SplitPartition, g: &Graph) -> usize {
    p.clique.iter().map(|&v| p.d_i(g, v)).max().unwrap_or(0)
}

/// Induced `K_{1,t}` in a split graph, using the partition.
///
/// Centres lie in K; at most one leaf can be a clique vertex. Scans
/// centres in ascending order and returns the first witness found.
pub fn find_star_split(g: &Graph, p: &SplitPartition, t: usize) -> Option<StarWitness> {
    assert!(t >= 2);
    let k = p.k_len();
    let mut k_index = vec![usize::MAX; g.n() + 1];
    for (i, &v) in p.clique.iter().enumerate() {
        k_index[v as usize] = i;
    }
    let words = k.div_ceil(64);
    let mut cover = vec![0u64; words];
    for &c in &p.clique {
        let leaves: Vec<Vertex> = p.n_i(g, c).collect();
        if leaves.len() >= t {
            return Some(StarWitness { center: c, leaves: leaves[..t].to_vec() });
        }
        if leaves.len() + 1 != t {
            continue;
        }
        cover.iter_mut().for_each(|w| *w = 0);
        for &l in &leaves {
            for &w in g.neighbors(l) {
                let i = k_index[w as usize];
                cover[i / 64] |= 1 << (i % 64);
            }
        }
        let ci = k_index[c as usize];
        cover[ci / 64] |= 1 << (ci % 64);
        let free = (0..k).find(|&i| cover[i / 64] & (1 << (i % 64)) == 0);
        if let Some(i) = free {
            let mut all = leaves;
            all.push(p.clique[i]);
            all.sort_unstable();
            return Some(StarWitness { center: c, leaves: all });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn clique_edges(vs: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        let mut e = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                e.push((a, b));
            }
        }
        e
    }

    #[test]
    fn clique_is_split() {
        let g = build_graph(4, &clique_edges(&[1, 2, 3, 4])).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!(p.clique, vec![1, 2, 3, 4]);
        assert!(p.independent.is_empty());
        assert_eq!(delta_i(&p, &g), 0);
    }

    #[test]
    fn c4_is_not_split() {
        let g = build_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let e = split_partition(&g).unwrap_err();
        assert_eq!(e.kind, ForbiddenKind::C4);
        let mut vs = e.vertices.clone();
        vs.sort();
        assert_eq!(vs, vec![1, 2, 3, 4]);
        assert!(e.is_valid_in(&g));
    }

    #[test]
    fn pendant_clique() {
        let mut e = clique_edges(&[1, 2, 3]);
        e.extend([(4, 1), (5, 2)]);
        let g = build_graph(5, &e).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!(p.clique, vec![1, 2, 3]);
        assert_eq!(p.independent, vec![4, 5]);
    }

    #[test]
    fn maximum_clique_adjustment() {
        // P3: degree order puts 2 first, then 1; 3 sees all of {1,2}? no: 3 ~ 2 only
        let g = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!(p.k_len(), 2);
        assert!(p.check(&g));
    }

    #[test]
    fn neighborhood_and_delta() {
        let g = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        let p = SplitPartition::from_sets(3, &[1, 2], &[3]);
        assert_eq!(neighborhood_i(&p, &g, &[2]).unwrap(), vec![3]);
        assert_eq!(neighborhood_i(&p, &g, &[1]).unwrap(), Vec::<Vertex>::new());
        assert_eq!(neighborhood_i(&p, &g, &[3]), Err(SplitError::SNotInClique(3)));
        let g2 = build_graph(5, &[(1, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let p2 = SplitPartition::from_sets(5, &[1, 2], &[3, 4, 5]);
        assert_eq!(delta_i(&p2, &g2), 2);
    }

    #[test]
    fn split_star_finder_matches_generic() {
        // K = {1..5}; 6,7,8 on vertex 1 only; vertex 2 is then a free leaf
        let mut e = clique_edges(&[1, 2, 3, 4, 5]);
        e.extend([(6, 1), (7, 1), (8, 1)]);
        let g = build_graph(8, &e).unwrap();
        let p = split_partition(&g).unwrap();
        let w = find_star_split(&g, &p, 4).unwrap();
        assert!(w.is_induced_in(&g));
        assert_eq!(w, StarWitness { center: 1, leaves: vec![2, 6, 7, 8] });
        assert!(crate::graph::find_star(&g, 4).is_some());
    }
}
