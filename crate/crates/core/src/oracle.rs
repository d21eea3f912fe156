//! Exact exponential Hamiltonian path / cycle deciders used as ground truth.

use crate::graph::{build_graph, is_connected, Graph, Vertex};
use crate::split::{split_partition, SplitPartition};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("backtracking node budget exhausted")]
    BudgetExceeded,
    #[error("cycles need at least 3 vertices")]
    TooSmall,
    #[error("bitmask cap must be at most 25, got {0}")]
    BadBudget(usize),
    #[error("enumeration supports n <= 9, got {0}")]
    NTooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    max_n: usize,
    pub max_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_n: 20, max_nodes: 50_000_000 }
    }
}

impl OracleBudget {
    pub const MAX_BITMASK_N: usize = 25;

    pub fn new(max_n: usize, max_nodes: u64) -> Result<Self, OracleError> {
        if max_n > Self::MAX_BITMASK_N {
            return Err(OracleError::BadBudget(max_n));
        }
        Ok(OracleBudget { max_n, max_nodes })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << (w - 1)))
        .collect()
}

/// `reach[S]` = bitset of vertices that can end a path covering exactly S.
fn reach_table(nb: &[u32], n: usize, start: Option<usize>) -> Vec<u32> {
    let full = 1usize << n;
    let mut reach = vec![0u32; full];
    match start {
        Some(s) => reach[1 << s] = 1 << s,
        None => (0..n).for_each(|v| reach[1 << v] = 1 << v),
    }
    for mask in 1..full {
        let mut ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let mut next = 0u32;
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            next |= nb[v];
        }
        next &= !(mask as u32);
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            reach[mask | 1 << w] |= 1 << w;
        }
    }
    reach
}

/// Walk back from `last`, always taking the smallest-id feasible predecessor.
fn rebuild(nb: &[u32], reach: &[u32], full: usize, last: usize) -> Vec<Vertex> {
    let mut seq = vec![last];
    let mut mask = full;
    let mut cur = last;
    while mask.count_ones() > 1 {
        mask &= !(1 << cur);
        let cand = reach[mask] & nb[cur];
        let p = cand.trailing_zeros() as usize;
        seq.push(p);
        cur = p;
    }
    seq.reverse();
    seq.into_iter().map(|i| i as Vertex + 1).collect()
}

fn canonical_path(mut p: Vec<Vertex>) -> Vec<Vertex> {
    if p.len() > 1 && p[p.len() - 1] < p[0] {
        p.reverse();
    }
    p
}

fn canonical_cycle(c: Vec<Vertex>) -> Vec<Vertex> {
    let n = c.len();
    let i = (0..n).min_by_key(|&i| c[i]).unwrap();
    let mut r: Vec<Vertex> = (0..n).map(|k| c[(i + k) % n]).collect();
    if n > 2 && r[1] > r[n - 1] {
        r[1..].reverse();
    }
    r
}

pub fn ham_path_oracle(g: &Graph, b: &OracleBudget) -> Result<Option<Vec<Vertex>>, OracleError> {
    let n = g.n();
    if n == 1 {
        return Ok(Some(vec![1]));
    }
    if !is_connected(g) {
        return Ok(None);
    }
    if n > b.max_n {
        return backtrack(g, b.max_nodes, false).map(|o| o.map(canonical_path));
    }
    let nb = masks(g);
    let reach = reach_table(&nb, n, None);
    let full = (1usize << n) - 1;
    let ends = reach[full];
    if ends == 0 {
        return Ok(None);
    }
    let last = ends.trailing_zeros() as usize;
    Ok(Some(canonical_path(rebuild(&nb, &reach, full, last))))
}

pub fn ham_cycle_oracle(g: &Graph, b: &OracleBudget) -> Result<Option<Vec<Vertex>>, OracleError> {
    let n = g.n();
    if n < 3 {
        return Err(OracleError::TooSmall);
    }
    if !is_connected(g) || g.vertices().any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    if n > b.max_n {
        return backtrack(g, b.max_nodes, true).map(|o| o.map(canonical_cycle));
    }
    let nb = masks(g);
    let reach = reach_table(&nb, n, Some(0));
    let full = (1usize << n) - 1;
    let ends = reach[full] & nb[0];
    if ends == 0 {
        return Ok(None);
    }
    let last = ends.trailing_zeros() as usize;
    Ok(Some(canonical_cycle(rebuild(&nb, &reach, full, last))))
}

/// Depth-first search over (visited set, end vertex) with failed states
/// memoised, so it is exact; the node cap bounds the work. Graphs above 128
/// vertices are always over budget.
fn backtrack(g: &Graph, max_nodes: u64, cycle: bool) -> Result<Option<Vec<Vertex>>, OracleError> {
    let n = g.n();
    if n > 128 {
        return Err(OracleError::BudgetExceeded);
    }
    let nb: Vec<u128> =
        g.vertices().map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << (w - 1))).collect();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    struct S {
        nb: Vec<u128>,
        full: u128,
        cycle: bool,
        nodes: u64,
        cap: u64,
        failed: HashSet<(u128, u8)>,
        path: Vec<usize>,
    }
    /// Can the unvisited vertices `rest` still be reached as one piece from `cur`?
    fn connected(nb: &[u128], cur: usize, rest: u128) -> bool {
        let mut seen = 1u128 << cur;
        let mut frontier = seen;
        let target = rest | seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = nb[v] & target & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == target
    }
    fn go(s: &mut S, visited: u128, cur: usize) -> Result<bool, OracleError> {
        if visited == s.full {
            return Ok(!s.cycle || s.nb[cur] & 1 != 0);
        }
        if s.failed.contains(&(visited, cur as u8)) {
            return Ok(false);
        }
        s.nodes += 1;
        if s.nodes > s.cap {
            return Err(OracleError::BudgetExceeded);
        }
        let rest = s.full & !visited;
        let mut ok = connected(&s.nb, cur, rest);
        if ok {
            // unvisited vertices with one usable neighbour must end the path
            let mut stranded = 0;
            let mut r = rest;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                let mut reach = s.nb[v] & (rest | 1 << cur);
                if s.cycle {
                    reach |= s.nb[v] & 1;
                }
                let d = reach.count_ones();
                if d <= 1 {
                    stranded += 1;
                }
            }
            ok = stranded <= if s.cycle { 0 } else { 1 };
        }
        if ok {
            let mut next = s.nb[cur] & rest;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                s.path.push(w);
                if go(s, visited | 1 << w, w)? {
                    return Ok(true);
                }
                s.path.pop();
            }
        }
        s.failed.insert((visited, cur as u8));
        Ok(false)
    }
    let mut s = S { nb, full, cycle, nodes: 0, cap: max_nodes, failed: HashSet::new(), path: Vec::new() };
    let starts: Vec<usize> = if cycle { vec![0] } else { (0..n).collect() };
    for st in starts {
        s.path = vec![st];
        if go(&mut s, 1 << st, st)? {
            return Ok(Some(s.path.iter().map(|&v| v as Vertex + 1).collect()));
        }
    }
    Ok(None)
}

/// Connected split graphs on `n` labelled vertices, each exactly once.
///
/// Built as a clique set K plus K-I edges, keeping a graph only when its
/// recognised partition has clique K. With `dedup`, one representative per
/// isomorphism class is kept (`n <= 7` only).
pub fn enumerate_small_split(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = (Graph, SplitPartition)>>, OracleError> {
    if n > 9 || n == 0 || (dedup && n > 7) {
        return Err(OracleError::NTooLarge(n));
    }
    let mut seen = std::collections::HashSet::new();
    let it = (1u32..1 << n).flat_map(move |kmask| {
        let clique: Vec<Vertex> = (0..n).filter(|b| kmask >> b & 1 == 1).map(|b| b as Vertex + 1).collect();
        let indep: Vec<Vertex> = (0..n).filter(|b| kmask >> b & 1 == 0).map(|b| b as Vertex + 1).collect();
        let mut base = Vec::new();
        for (i, &a) in clique.iter().enumerate() {
            base.extend(clique[i + 1..].iter().map(|&b| (a, b)));
        }
        let cross: Vec<(Vertex, Vertex)> = clique.iter().flat_map(|&a| indep.iter().map(move |&b| (a, b))).collect();
        (0u64..1 << cross.len()).filter_map(move |bits| {
            let mut edges = base.clone();
            edges.extend(cross.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e));
            let g = build_graph(n, &edges).unwrap();
            if !is_connected(&g) {
                return None;
            }
            let p = split_partition(&g).ok()?;
            (p.clique == clique).then_some((g, p))
        })
    });
    let it = it.filter(move |(g, _)| !dedup || seen.insert(canonical_form(g)));
    Ok(Box::new(it))
}

/// Minimum upper-triangle adjacency string over all relabellings.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical form is brute force");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    let adj: Vec<Vec<bool>> =
        (1..=n).map(|u| (1..=n).map(|v| g.has_edge(u as Vertex, v as Vertex)).collect()).collect();
    loop {
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | adj[perm[i]][perm[j]] as u64;
            }
        }
        best = best.min(code);
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

/// One split graph per choice of |K| and a multiset of I-neighbourhoods.
///
/// Every connected split graph on `n` vertices is isomorphic to at least one
/// member, which makes this a complete corpus up to isomorphism.
pub fn enumerate_split_classes(n: usize) -> impl Iterator<Item = Graph> {
    (1..=n).flat_map(move |k| {
        let i = n - k;
        let subsets: u32 = (1u32 << k) - 1; // nonempty masks 1..=subsets
        let mut state: Vec<u32> = vec![1; i];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mut edges = Vec::new();
            for a in 1..=k as Vertex {
                for b in a + 1..=k as Vertex {
                    edges.push((a, b));
                }
            }
            for (j, &mask) in state.iter().enumerate() {
                let u = (k + j + 1) as Vertex;
                for b in 0..k {
                    if mask >> b & 1 == 1 {
                        edges.push((u, b as Vertex + 1));
                    }
                }
            }
            let g = build_graph(n, &edges).unwrap();
            // advance the non-decreasing sequence of masks
            let mut pos = i;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                if state[pos] < subsets {
                    let v = state[pos] + 1;
                    for s in state[pos..].iter_mut() {
                        *s = v;
                    }
                    break;
                }
            }
            Some(g)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle_examples() {
        let b = OracleBudget::default();
        let p3 = build_graph(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(ham_path_oracle(&p3, &b).unwrap(), Some(vec![1, 2, 3]));
        assert_eq!(ham_cycle_oracle(&p3, &b).unwrap(), None);
        let c4 = build_graph(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(ham_cycle_oracle(&c4, &b).unwrap(), Some(vec![1, 2, 3, 4]));
        let trio = build_graph(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(ham_path_oracle(&trio, &b).unwrap(), None);
        assert_eq!(ham_cycle_oracle(&build_graph(2, &[(1, 2)]).unwrap(), &b), Err(OracleError::TooSmall));
    }

    #[test]
    fn backtracking_agrees_with_dp() {
        let small = OracleBudget::new(0, 1_000_000).unwrap();
        let b = OracleBudget::default();
        for g in enumerate_split_classes(6) {
            let a = ham_path_oracle(&g, &b).unwrap().is_some();
            let c = ham_path_oracle(&g, &small).unwrap().is_some();
            assert_eq!(a, c);
        }
    }

    #[test]
    fn small_enumeration_counts() {
        assert_eq!(enumerate_small_split(2, true).unwrap().count(), 1);
        assert_eq!(enumerate_small_split(3, true).unwrap().count(), 2);
        // connected graphs on 4 vertices: 6 classes, C4 is the only non-split one
        assert_eq!(enumerate_small_split(4, true).unwrap().count(), 5);
        assert!(enumerate_small_split(10, false).is_err());
    }

    /// Brute force over all edge subsets with a forbidden-subgraph split test.
    fn labelled_split_brute(n: usize) -> usize {
        let pairs: Vec<(Vertex, Vertex)> =
            (1..=n as Vertex).flat_map(|u| (u + 1..=n as Vertex).map(move |v| (u, v))).collect();
        let mut count = 0;
        for bits in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = build_graph(n, &edges).unwrap();
            if is_connected(&g) && crate::split::forbidden_witness(&g).is_none() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn labelled_enumeration_matches_brute_force() {
        for n in 1..=6 {
            let fast: Vec<Graph> = enumerate_small_split(n, false).unwrap().map(|(g, _)| g).collect();
            let distinct: std::collections::HashSet<Vec<(Vertex, Vertex)>> = fast.iter().map(|g| g.edges().collect()).collect();
            assert_eq!(distinct.len(), fast.len(), "n = {n}");
            assert_eq!(fast.len(), labelled_split_brute(n), "n = {n}");
        }
    }

    #[test]
    fn class_enumeration_covers_labelled_classes() {
        for n in 1..=6 {
            let labelled: std::collections::HashSet<u64> =
                enumerate_small_split(n, true).unwrap().map(|(g, _)| canonical_form(&g)).collect();
            let classes: std::collections::HashSet<u64> = enumerate_split_classes(n)
                .filter(|g| is_connected(g))
                .map(|g| canonical_form(&g))
                .collect();
            assert_eq!(labelled, classes, "n = {n}");
        }
    }

    #[test]
    fn budget_cap() {
        assert!(OracleBudget::new(26, 1).is_err());
        assert_eq!(OracleBudget::default().max_n(), 20);
    }
}
