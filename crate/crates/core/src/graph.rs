//! Simple undirected graphs on vertex ids `1..=n`.

use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex out of range: {0} (n = {1})")]
    OutOfRangeVertex(i64, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("2-connectivity needs at least 3 vertices")]
    TooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    // adj[0] is unused so that ids index directly
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        1..=self.n as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.adj[a as usize].binary_search(&b).is_ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && (v as usize) <= self.n
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u as usize].iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `keep`, relabelled `1..` in the order given.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![0 as Vertex; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            index[v as usize] = i as Vertex + 1;
        }
        let mut edges = Vec::new();
        for &u in keep {
            for &w in self.neighbors(u) {
                let (a, b) = (index[u as usize], index[w as usize]);
                if b != 0 && a < b {
                    edges.push((a, b));
                }
            }
        }
        build_graph(keep.len().max(1), &edges).expect("induced subgraph is well formed")
    }

    /// Apply a relabelling `perm[old] = new` (index 0 ignored).
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u as usize], perm[v as usize])).collect();
        build_graph(self.n, &edges).expect("relabelling is a bijection")
    }
}

pub fn build_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        for x in [u, v] {
            if x == 0 || x as usize > n {
                return Err(GraphError::OutOfRangeVertex(x as i64, n));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut m2 = 0;
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
        m2 += list.len();
    }
    Ok(Graph { n, m: m2 / 2, adj })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarWitness {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

impl StarWitness {
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        self.leaves.iter().all(|&l| g.has_edge(self.center, l))
            && self
                .leaves
                .iter()
                .enumerate()
                .all(|(i, &a)| self.leaves[i + 1..].iter().all(|&b| a != b && !g.has_edge(a, b)))
    }
}

/// Lexicographically first induced `K_{1,t}` (center first, then leaves).
pub fn find_star(g: &Graph, t: usize) -> Option<StarWitness> {
    assert!(t >= 2, "star size must be at least 2");
    fn extend(g: &Graph, nbrs: &[Vertex], from: usize, t: usize, chosen: &mut Vec<Vertex>) -> bool {
        if chosen.len() == t {
            return true;
        }
        for i in from..nbrs.len() {
            if nbrs.len() - i < t - chosen.len() {
                return false;
            }
            let c = nbrs[i];
            if chosen.iter().all(|&x| !g.has_edge(x, c)) {
                chosen.push(c);
                if extend(g, nbrs, i + 1, t, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    for c in g.vertices() {
        let nbrs = g.neighbors(c);
        if nbrs.len() < t {
            continue;
        }
        let mut chosen = Vec::with_capacity(t);
        if extend(g, nbrs, 0, t, &mut chosen) {
            return Some(StarWitness { center: c, leaves: chosen });
        }
    }
    None
}

pub fn is_star_free(g: &Graph, t: usize) -> bool {
    find_star(g, t).is_none()
}

fn component_labels(g: &Graph, removed: &[bool]) -> (Vec<u32>, usize) {
    let mut label = vec![0u32; g.n + 1];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in g.vertices() {
        if removed[s as usize] || label[s as usize] != 0 {
            continue;
        }
        count += 1;
        label[s as usize] = count as u32;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !removed[w as usize] && label[w as usize] == 0 {
                    label[w as usize] = count as u32;
                    stack.push(w);
                }
            }
        }
    }
    (label, count)
}

pub fn components_after_removal(g: &Graph, s: &[Vertex]) -> usize {
    let mut removed = vec![false; g.n + 1];
    for &v in s {
        if g.contains(v) {
            removed[v as usize] = true;
        }
    }
    component_labels(g, &removed).1
}

/// Smallest vertex of every connected component, ascending.
pub fn component_representatives(g: &Graph) -> Vec<Vertex> {
    let (label, count) = component_labels(g, &vec![false; g.n + 1]);
    let mut reps = Vec::with_capacity(count);
    let mut seen = vec![false; count + 1];
    for v in g.vertices() {
        let l = label[v as usize] as usize;
        if !seen[l] {
            seen[l] = true;
            reps.push(v);
        }
    }
    reps
}

pub fn is_connected(g: &Graph) -> bool {
    components_after_removal(g, &[]) == 1
}

/// Cut vertices in ascending order (iterative Tarjan).
pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    let n = g.n;
    let mut disc = vec![0u32; n + 1];
    let mut low = vec![0u32; n + 1];
    let mut is_cut = vec![false; n + 1];
    let mut timer = 0u32;
    for root in g.vertices() {
        if disc[root as usize] != 0 {
            continue;
        }
        timer += 1;
        disc[root as usize] = timer;
        low[root as usize] = timer;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, 0, 0)];
        while let Some(top) = stack.last_mut() {
            let (u, parent, idx) = *top;
            if idx < g.degree(u) {
                top.2 += 1;
                let w = g.neighbors(u)[idx];
                if w == parent {
                    continue;
                }
                if disc[w as usize] == 0 {
                    timer += 1;
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else {
                    low[u as usize] = low[u as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if parent != 0 {
                    low[parent as usize] = low[parent as usize].min(low[u as usize]);
                    if parent != root && low[u as usize] >= disc[parent as usize] {
                        is_cut[parent as usize] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root as usize] = true;
        }
    }
    g.vertices().filter(|&v| is_cut[v as usize]).collect()
}

pub fn is_2connected(g: &Graph) -> Result<bool, GraphError> {
    if g.n < 3 {
        return Err(GraphError::TooSmall);
    }
    Ok(is_connected(g) && articulation_points(g).is_empty())
}

/// Checks that `seq` visits every vertex once with consecutive vertices adjacent.
pub fn is_hamiltonian_path(g: &Graph, seq: &[Vertex]) -> bool {
    if seq.len() != g.n {
        return false;
    }
    let mut seen = vec![false; g.n + 1];
    for &v in seq {
        if !g.contains(v) || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn is_hamiltonian_cycle(g: &Graph, seq: &[Vertex]) -> bool {
    g.n >= 3 && is_hamiltonian_path(g, seq) && g.has_edge(seq[0], seq[seq.len() - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        build_graph(3, &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(path3().m(), 2);
        assert_eq!(build_graph(1, &[]).unwrap().m(), 0);
        assert_eq!(build_graph(3, &[(1, 2), (2, 1)]).unwrap().m(), 1);
        assert_eq!(build_graph(3, &[(1, 4)]), Err(GraphError::OutOfRangeVertex(4, 3)));
        assert_eq!(build_graph(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn star_examples() {
        let star = build_graph(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(find_star(&star, 4), Some(StarWitness { center: 1, leaves: vec![2, 3, 4, 5] }));
        let mut e = Vec::new();
        for u in 1..=5 {
            for v in u + 1..=5 {
                e.push((u, v));
            }
        }
        assert!(is_star_free(&build_graph(5, &e).unwrap(), 3));
    }

    #[test]
    fn connectivity_examples() {
        let p3 = path3();
        assert!(is_connected(&p3));
        assert_eq!(is_2connected(&p3), Ok(false));
        assert_eq!(articulation_points(&p3), vec![2]);
        let c4 = build_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(is_2connected(&c4), Ok(true));
        let two = build_graph(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(!is_connected(&two));
        assert_eq!(is_2connected(&build_graph(2, &[(1, 2)]).unwrap()), Err(GraphError::TooSmall));
    }

    #[test]
    fn removal_examples() {
        let star = build_graph(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(components_after_removal(&star, &[1]), 3);
        assert_eq!(components_after_removal(&path3(), &[]), 1);
        assert_eq!(components_after_removal(&path3(), &[1, 2, 3]), 0);
        // K={1,2,6}, I={3,4} hanging off 1, vertex 5 on {2,6}
        let g = build_graph(6, &[(1, 2), (1, 6), (2, 6), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        assert_eq!(components_after_removal(&g, &[1]), 3);
    }
}
