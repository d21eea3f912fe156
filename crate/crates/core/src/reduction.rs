//! Hamiltonian cycle (split, Δᴵ ≤ 3) to Hamiltonian path, one instance per clique-independent edge.

use crate::graph::{build_graph, find_star, is_hamiltonian_cycle, is_hamiltonian_path, Graph, Vertex};
use crate::oracle::{ham_cycle_oracle, ham_path_oracle, OracleBudget, OracleError};
use crate::split::{delta_i, split_partition, NotSplit, SplitPartition};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("Δᴵ = {0} exceeds 3")]
    DeltaITooLarge(usize),
    #[error(transparent)]
    NotSplit(#[from] NotSplit),
    #[error("partition does not match the graph")]
    BadPartition,
    #[error("sequence is not a Hamiltonian path of the reduced graph")]
    NotHamiltonianPath,
    #[error("rewiring did not give a Hamiltonian cycle: {0}")]
    RewireFailed(String),
    #[error("reduced instance broke an invariant: {0}")]
    Invariant(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub partition: SplitPartition,
    /// (u ∈ K, v ∈ I), the edge removed from the source graph
    pub source_edge: (Vertex, Vertex),
    pub z: Vertex,
    pub s: Vertex,
    pub t: Vertex,
}

/// Clique-independent edges of `g`, sorted by (u, v).
pub fn ki_edges(g: &Graph, p: &SplitPartition) -> Vec<(Vertex, Vertex)> {
    let mut out: Vec<(Vertex, Vertex)> = p
        .clique
        .iter()
        .flat_map(|&u| g.neighbors(u).iter().filter(|&&w| p.in_i(w)).map(move |&w| (u, w)))
        .collect();
    out.sort_unstable();
    out
}

pub fn reduce_one(g: &Graph, p: &SplitPartition, (u, v): (Vertex, Vertex)) -> Result<ReducedInstance, ReductionError> {
    let n = g.n() as Vertex;
    let (z, s, t) = (n + 1, n + 2, n + 3);
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().filter(|&(a, b)| (a, b) != (u.min(v), u.max(v))).collect();
    edges.extend(p.clique.iter().map(|&w| (w, z)));
    edges.extend([(z, t), (z, v), (u, s)]);
    let graph = build_graph(g.n() + 3, &edges).map_err(|e| ReductionError::Invariant(e.to_string()))?;
    let mut clique = p.clique.clone();
    clique.push(z);
    let mut independent = p.independent.clone();
    independent.extend([s, t]);
    let partition = SplitPartition::from_sets(g.n() + 3, &clique, &independent);
    let inst = ReducedInstance { graph, partition, source_edge: (u, v), z, s, t };
    check_instance(g, p, &inst)?;
    Ok(inst)
}

fn check_instance(g: &Graph, p: &SplitPartition, inst: &ReducedInstance) -> Result<(), ReductionError> {
    let bad = |m: &str| Err(ReductionError::Invariant(m.to_string()));
    let h = &inst.graph;
    if !inst.partition.check(h) {
        return bad("K ∪ {z}, I ∪ {s, t} is not a split partition");
    }
    if split_partition(h).is_err() {
        return bad("reduced graph is not split");
    }
    if delta_i(&inst.partition, h) > 3 {
        return bad("Δᴵ exceeds 3");
    }
    if inst.partition.d_i(h, inst.z) != 2 {
        return bad("dᴵ(z) must be 2");
    }
    if p.clique.iter().any(|&w| !h.has_edge(inst.z, w)) {
        return bad("z misses a clique vertex");
    }
    let u = inst.source_edge.0;
    if inst.partition.d_i(h, u) != p.d_i(g, u) {
        return bad("dᴵ(u) changed");
    }
    Ok(())
}

pub fn reduce_all(g: &Graph, p: &SplitPartition) -> Result<Vec<ReducedInstance>, ReductionError> {
    if !p.check(g) {
        split_partition(g)?;
        return Err(ReductionError::BadPartition);
    }
    let d = delta_i(p, g);
    if d > 3 {
        return Err(ReductionError::DeltaITooLarge(d));
    }
    ki_edges(g, p).into_iter().map(|e| reduce_one(g, p, e)).collect()
}

/// Hamiltonian cycle of the source graph from a Hamiltonian path of a reduced instance.
pub fn extract_hc(inst: &ReducedInstance, path: &[Vertex]) -> Result<Vec<Vertex>, ReductionError> {
    if !is_hamiltonian_path(&inst.graph, path) {
        return Err(ReductionError::NotHamiltonianPath);
    }
    let mut p = path.to_vec();
    if p[0] != inst.t {
        p.reverse();
    }
    let (u, v) = inst.source_edge;
    let k = p.len();
    if p[0] != inst.t || p[1] != inst.z || p[k - 1] != inst.s || p[k - 2] != u {
        return Err(ReductionError::RewireFailed(format!("path is not of the form (t, z, ..., u, s): {p:?}")));
    }
    let body = &p[2..k - 1];
    let at = body.iter().position(|&x| x == v).expect("v lies on a Hamiltonian path");
    // (z1 .. zk, v, rest) becomes (v, zk .. z1, rest)
    let mut cycle = Vec::with_capacity(body.len());
    cycle.push(v);
    cycle.extend(body[..at].iter().rev());
    cycle.extend(&body[at + 1..]);
    let n = inst.graph.n() - 3;
    let source = source_graph(inst);
    if cycle.len() != n || !is_hamiltonian_cycle(&source, &cycle) {
        return Err(ReductionError::RewireFailed(format!("{cycle:?} is not a Hamiltonian cycle")));
    }
    Ok(cycle)
}

/// The source graph, recovered by undoing the construction.
pub fn source_graph(inst: &ReducedInstance) -> Graph {
    let fresh = [inst.z, inst.s, inst.t];
    let (u, v) = inst.source_edge;
    let mut edges: Vec<(Vertex, Vertex)> =
        inst.graph.edges().filter(|(a, b)| !fresh.contains(a) && !fresh.contains(b)).collect();
    edges.push((u, v));
    build_graph(inst.graph.n() - 3, &edges).expect("source ids are in range")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub instances: usize,
    pub source_hc: bool,
    /// 1-based indices of reduced instances with a Hamiltonian path
    pub hp_instances: Vec<usize>,
    pub iff_holds: bool,
    /// (instance index, extracted cycle) for every positive instance
    pub extracted: Vec<(usize, Vec<Vertex>)>,
    pub bad_endpoints: usize,
    /// reduced instances containing an induced K1,5
    pub star5_instances: Vec<usize>,
}

pub fn verify_reduction(g: &Graph, p: &SplitPartition, b: &OracleBudget) -> Result<ReductionReport, ReductionError> {
    let insts = reduce_all(g, p)?;
    let source_hc = match ham_cycle_oracle(g, b) {
        Ok(c) => c.is_some(),
        Err(OracleError::TooSmall) => false,
        Err(e) => return Err(e.into()),
    };
    let mut report = ReductionReport {
        instances: insts.len(),
        source_hc,
        hp_instances: Vec::new(),
        iff_holds: false,
        extracted: Vec::new(),
        bad_endpoints: 0,
        star5_instances: Vec::new(),
    };
    for (j, inst) in insts.iter().enumerate() {
        if find_star(&inst.graph, 5).is_some() {
            report.star5_instances.push(j + 1);
        }
        let Some(path) = ham_path_oracle(&inst.graph, b)? else { continue };
        let ends = [path[0], path[path.len() - 1]];
        if !(ends.contains(&inst.s) && ends.contains(&inst.t)) {
            report.bad_endpoints += 1;
        }
        report.hp_instances.push(j + 1);
        report.extracted.push((j + 1, extract_hc(inst, &path)?));
    }
    report.iff_holds = report.source_hc == !report.hp_instances.is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K = {1..4}, I = {5..8}; 5:{2,4}, 6:{1,2}, 7:{3,4}, 8:{1,3}
    fn square() -> (Graph, SplitPartition) {
        let mut e = vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        e.extend([(5, 2), (5, 4), (6, 1), (6, 2), (7, 3), (7, 4), (8, 1), (8, 3)]);
        let g = build_graph(8, &e).unwrap();
        let p = SplitPartition::from_sets(8, &[1, 2, 3, 4], &[5, 6, 7, 8]);
        (g, p)
    }

    #[test]
    fn one_instance_per_ki_edge() {
        let (g, p) = square();
        let insts = reduce_all(&g, &p).unwrap();
        assert_eq!(insts.len(), 8);
        assert_eq!(insts[0].source_edge, (1, 6));
        assert!(insts.iter().all(|i| (i.z, i.s, i.t) == (9, 10, 11)));
    }

    #[test]
    fn direct_form_extracts() {
        let (g, p) = square();
        let inst = reduce_one(&g, &p, (4, 7)).unwrap();
        let path = [11, 9, 7, 3, 8, 1, 6, 2, 5, 4, 10];
        assert_eq!(extract_hc(&inst, &path).unwrap(), vec![7, 3, 8, 1, 6, 2, 5, 4]);
    }

    #[test]
    fn rewired_form_extracts() {
        // K = {1, 2, 3}, I = {4, 5}; 4:{2,3}, 5:{1,2,3}
        let g = build_graph(5, &[(1, 2), (1, 3), (2, 3), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)]).unwrap();
        let p = SplitPartition::from_sets(5, &[1, 2, 3], &[4, 5]);
        let inst = reduce_one(&g, &p, (3, 5)).unwrap();
        let (z, s, t) = (inst.z, inst.s, inst.t);
        let path = [s, 3, 4, 2, 5, 1, z, t];
        assert_eq!(extract_hc(&inst, &path).unwrap(), vec![5, 1, 2, 4, 3]);
        assert_eq!(extract_hc(&inst, &[t, z, 1, 5, 2, 3, 4]), Err(ReductionError::NotHamiltonianPath));
    }

    #[test]
    fn empty_independent_side_gives_no_instances() {
        let g = build_graph(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let p = SplitPartition::from_sets(3, &[1, 2, 3], &[]);
        assert!(reduce_all(&g, &p).unwrap().is_empty());
    }
}
