//! Seeded instance generators.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)`, so a spec and
//! seed pin the output bit for bit.

use crate::graph::{build_graph, find_star, is_connected, Graph, Vertex};
use crate::split::{delta_i, find_star_split, split_partition, SplitPartition};
use crate::structure::structure_report;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub const REJECTION_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GenKind {
    Split,
    K13Free,
    K14FreeD2,
    K14FreeD3,
    PropertyA,
    PlantedHp,
    PlantedHc,
}

impl GenKind {
    pub const ALL: [GenKind; 7] = [
        GenKind::Split,
        GenKind::K13Free,
        GenKind::K14FreeD2,
        GenKind::K14FreeD3,
        GenKind::PropertyA,
        GenKind::PlantedHp,
        GenKind::PlantedHc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Split => "SPLIT",
            GenKind::K13Free => "K13FREE",
            GenKind::K14FreeD2 => "K14FREE_D2",
            GenKind::K14FreeD3 => "K14FREE_D3",
            GenKind::PropertyA => "PROPERTY_A",
            GenKind::PlantedHp => "PLANTED_HP",
            GenKind::PlantedHc => "PLANTED_HC",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = GenError;
    fn from_str(s: &str) -> Result<Self, GenError> {
        let up = s.to_ascii_uppercase().replace('-', "_");
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == up)
            .ok_or_else(|| GenError::InfeasibleSpec(format!("unknown kind {s}")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extras {
    /// exact number of short cycles in H
    pub short_cycles: Option<usize>,
    /// exact number of I-K paths in H
    pub ik_paths: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub nk: usize,
    pub ni: usize,
    pub seed: u64,
    #[serde(default)]
    pub extras: Extras,
}

impl GenSpec {
    pub fn new(kind: GenKind, nk: usize, ni: usize, seed: u64) -> Self {
        GenSpec { kind, nk, ni, seed, extras: Extras::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible spec: {0}")]
    InfeasibleSpec(String),
    #[error("no instance accepted after {0} resamples")]
    RejectionLimit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planted {
    pub sequence: Vec<Vertex>,
    pub cycle: bool,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub partition: SplitPartition,
    pub planted: Option<Planted>,
}

fn infeasible(msg: &str) -> GenError {
    GenError::InfeasibleSpec(msg.to_string())
}

/// Clique on 1..=nk plus the given I-neighbourhoods (I ids follow K).
fn assemble(nk: usize, nbhd: &[Vec<Vertex>]) -> Graph {
    let n = nk + nbhd.len();
    let mut edges = Vec::new();
    for a in 1..=nk as Vertex {
        for b in a + 1..=nk as Vertex {
            edges.push((a, b));
        }
    }
    for (i, nb) in nbhd.iter().enumerate() {
        let x = (nk + 1 + i) as Vertex;
        edges.extend(nb.iter().map(|&w| (w, x)));
    }
    build_graph(n, &edges).expect("generator produced an invalid edge")
}

fn sample_k(rng: &mut ChaCha8Rng, nk: usize, d: usize) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = rand::seq::index::sample(rng, nk, d).into_iter().map(|i| i as Vertex + 1).collect();
    v.sort_unstable();
    v
}

fn finish(g: Graph, planted: Option<Planted>) -> Generated {
    let partition = split_partition(&g).expect("generator produced a non-split graph");
    Generated { graph: g, partition, planted }
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    if spec.nk == 0 {
        return Err(infeasible("nk must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        GenKind::Split => Ok(gen_split(&mut rng, spec.nk, spec.ni)),
        GenKind::K13Free => gen_k13(&mut rng, spec),
        GenKind::K14FreeD2 => gen_d2(&mut rng, spec),
        GenKind::K14FreeD3 => gen_d3(&mut rng, spec),
        GenKind::PropertyA => gen_property_a(&mut rng, spec),
        GenKind::PlantedHp => gen_planted(&mut rng, spec.nk, spec.ni, false),
        GenKind::PlantedHc => gen_planted(&mut rng, spec.nk, spec.ni, true),
    }
}

fn gen_split(rng: &mut ChaCha8Rng, nk: usize, ni: usize) -> Generated {
    let top = if nk == 1 { 1 } else { nk - 1 };
    let nbhd: Vec<Vec<Vertex>> = (0..ni)
        .map(|_| {
            let d = rng.random_range(1..=top);
            sample_k(rng, nk, d)
        })
        .collect();
    finish(assemble(nk, &nbhd), None)
}

fn gen_k13(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Result<Generated, GenError> {
    let (nk, ni) = (spec.nk, spec.ni);
    if nk < 2 && ni > 0 {
        return Err(infeasible("K13FREE needs nk >= 2"));
    }
    for _ in 0..REJECTION_LIMIT {
        // neighbourhoods missing only a few clique vertices keep claws rare
        let nbhd: Vec<Vec<Vertex>> = (0..ni)
            .map(|_| {
                let miss = rng.random_range(1..=nk.min(3).max(1)).min(nk - 1);
                let d = if rng.random_bool(0.3) { rng.random_range(1..nk) } else { nk - miss };
                sample_k(rng, nk, d.max(1))
            })
            .collect();
        let g = assemble(nk, &nbhd);
        let p = split_partition(&g).expect("split by construction");
        if find_star_split(&g, &p, 3).is_none() {
            return Ok(Generated { graph: g, partition: p, planted: None });
        }
    }
    Err(GenError::RejectionLimit(REJECTION_LIMIT))
}

/// Random I-neighbourhoods with clique-side I-degree at most `cap`.
fn capped(rng: &mut ChaCha8Rng, nk: usize, ni: usize, cap: usize, degrees: &[usize]) -> Option<Vec<Vec<Vertex>>> {
    let mut load = vec![0usize; nk + 1];
    let mut nbhd = Vec::with_capacity(ni);
    for &d in degrees {
        let mut free: Vec<Vertex> = (1..=nk as Vertex).filter(|&w| load[w as usize] < cap).collect();
        if free.len() < d {
            return None;
        }
        free.shuffle(rng);
        let mut nb: Vec<Vertex> = free[..d].to_vec();
        nb.sort_unstable();
        for &w in &nb {
            load[w as usize] += 1;
        }
        nbhd.push(nb);
    }
    Some(nbhd)
}

fn check_extras(g: &Graph, p: &SplitPartition, ex: &Extras) -> bool {
    if ex.short_cycles.is_none() && ex.ik_paths.is_none() {
        return true;
    }
    let Ok(r) = structure_report(g, p) else { return false };
    ex.short_cycles.is_none_or(|c| c == r.short_cycles) && ex.ik_paths.is_none_or(|c| c == r.ik_paths)
}

fn gen_d2(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Result<Generated, GenError> {
    let (nk, ni) = (spec.nk, spec.ni);
    if ni > nk * 2 || nk < 2 || ni < 2 {
        return Err(infeasible("K14FREE_D2 needs 2 <= ni <= 2*nk and nk >= 2"));
    }
    for _ in 0..REJECTION_LIMIT {
        let degrees: Vec<usize> = (0..ni).map(|_| rng.random_range(1..=3.min(nk - 1))).collect();
        let Some(nbhd) = capped(rng, nk, ni, 2, &degrees) else { continue };
        let g = assemble(nk, &nbhd);
        if !is_connected(&g) {
            continue;
        }
        let p = split_partition(&g).expect("split by construction");
        if delta_i(&p, &g) == 2 && check_extras(&g, &p, &spec.extras) {
            return Ok(Generated { graph: g, partition: p, planted: None });
        }
    }
    Err(GenError::RejectionLimit(REJECTION_LIMIT))
}

/// Degree-3-capped instances with a few near-universal "hub" I-vertices so that
/// the star condition at clique vertices with three I-neighbours can hold.
fn gen_d3(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Result<Generated, GenError> {
    let (nk, ni) = (spec.nk, spec.ni);
    if ni < 3 || nk < 3 {
        return Err(infeasible("K14FREE_D3 needs ni >= 3 and nk >= 3"));
    }
    if ni > 3 * nk {
        return Err(infeasible("K14FREE_D3 needs ni <= 3*nk"));
    }
    for _ in 0..REJECTION_LIMIT {
        let hubs = rng.random_range(0..=2usize.min(ni));
        let mut degrees = Vec::with_capacity(ni);
        for h in 0..ni {
            if h < hubs {
                let miss = rng.random_range(1..=2usize.min(nk - 1));
                degrees.push(nk - miss);
            } else {
                let d = match rng.random_range(0..10) {
                    0 => 1,
                    1..=7 => 2,
                    _ => 3,
                };
                degrees.push(d.min(nk - 1));
            }
        }
        let Some(nbhd) = capped(rng, nk, ni, 3, &degrees) else { continue };
        let g = assemble(nk, &nbhd);
        if !is_connected(&g) {
            continue;
        }
        let p = split_partition(&g).expect("split by construction");
        if delta_i(&p, &g) != 3 || find_star_split(&g, &p, 4).is_some() {
            continue;
        }
        if check_extras(&g, &p, &spec.extras) {
            return Ok(Generated { graph: g, partition: p, planted: None });
        }
    }
    Err(GenError::RejectionLimit(REJECTION_LIMIT))
}

/// Two hubs, one missing clique vertex 1 and one missing vertex 2, plus small
/// I-vertices of degree at most 3 under the resulting capacities. Scales to
/// large n without rejection of the whole graph.
fn gen_property_a(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Result<Generated, GenError> {
    let (nk, ni) = (spec.nk, spec.ni);
    let cycles = spec.extras.short_cycles.unwrap_or(0);
    let iks = spec.extras.ik_paths.unwrap_or(0);
    if nk < 8 || ni < 9 || ni > nk + 1 {
        return Err(infeasible("PROPERTY_A needs |K| >= |I|-1 >= 8"));
    }
    if cycles > 1 || cycles + iks > 2 {
        return Err(infeasible("PROPERTY_A allows at most one short cycle and two I-K paths in total"));
    }
    // capacities: 1 and 2 see one hub, the rest see both
    let smalls = ni - 2;
    let need = 2 * smalls - iks;
    if need > nk + 2 {
        return Err(infeasible("too many independent vertices for the clique (needs 2|I| <= |K| + 6 + #pendants)"));
    }
    for _ in 0..REJECTION_LIMIT {
        let mut cap = vec![1usize; nk + 1];
        cap[0] = 0;
        cap[1] = 2;
        cap[2] = 2;
        let mut nbhd: Vec<Vec<Vertex>> = Vec::with_capacity(ni);
        nbhd.push((2..=nk as Vertex).collect());
        nbhd.push((1..=nk as Vertex).filter(|&w| w != 2).collect());
        // a small vertex on both 1 and 2 keeps 1 and 2 star-free
        let mut pending: Vec<Vec<Vertex>> = vec![vec![1, 2]; 1 + cycles];
        cap[1] -= 1 + cycles;
        cap[2] -= 1 + cycles;
        let mut avail: Vec<Vertex> = (1..=nk as Vertex).filter(|&w| cap[w as usize] > 0).collect();
        let mut spare: usize = avail.iter().map(|&w| cap[w as usize]).sum();
        let mut pendants = iks;
        let mut ok = true;
        for left in (0..smalls - pending.len()).rev() {
            let d = if pendants > 0 {
                pendants -= 1;
                1
            } else if spare >= 2 * left + 3 + pendants && rng.random_bool(0.15) {
                3
            } else {
                2
            };
            if avail.len() < d {
                ok = false;
                break;
            }
            let mut nb: Vec<Vertex> = Vec::with_capacity(d);
            for _ in 0..d {
                let (idx, w) = loop {
                    let idx = rng.random_range(0..avail.len());
                    if !nb.contains(&avail[idx]) {
                        break (idx, avail[idx]);
                    }
                };
                nb.push(w);
                cap[w as usize] -= 1;
                if cap[w as usize] == 0 {
                    avail.swap_remove(idx);
                }
            }
            spare -= d;
            nb.sort_unstable();
            pending.push(nb);
        }
        if !ok {
            continue;
        }
        nbhd.extend(pending);
        let g = assemble(nk, &nbhd);
        let p = split_partition(&g).expect("split by construction");
        if delta_i(&p, &g) != 3 || find_star_split(&g, &p, 4).is_some() {
            continue;
        }
        let Ok(r) = structure_report(&g, &p) else { continue };
        if r.property_a && r.short_cycles == cycles && r.ik_paths == iks {
            return Ok(Generated { graph: g, partition: p, planted: None });
        }
    }
    Err(GenError::RejectionLimit(REJECTION_LIMIT))
}

/// A random alternating sequence through K and I with its edges forced, plus
/// random extra K-I edges.
fn gen_planted(rng: &mut ChaCha8Rng, nk: usize, ni: usize, cycle: bool) -> Result<Generated, GenError> {
    let limit = if cycle { nk } else { nk + 1 };
    if ni > limit {
        return Err(infeasible("too many independent vertices to plant"));
    }
    if cycle && nk + ni < 3 {
        return Err(infeasible("a cycle needs three vertices"));
    }
    let mut ks: Vec<Vertex> = (1..=nk as Vertex).collect();
    ks.shuffle(rng);
    let mut is: Vec<Vertex> = (nk as Vertex + 1..=(nk + ni) as Vertex).collect();
    is.shuffle(rng);
    // choose the K slots after which an I vertex is inserted
    let slots = if cycle { nk } else { nk + 1 };
    let mut chosen: Vec<usize> = rand::seq::index::sample(rng, slots, ni).into_iter().collect();
    chosen.sort_unstable();
    let mut seq = Vec::with_capacity(nk + ni);
    let mut it = is.iter();
    for slot in 0..slots {
        if slot < nk {
            if !cycle && chosen.binary_search(&slot).is_ok() {
                seq.push(*it.next().unwrap());
            }
            seq.push(ks[slot]);
            if cycle && chosen.binary_search(&slot).is_ok() {
                seq.push(*it.next().unwrap());
            }
        } else if chosen.binary_search(&slot).is_ok() {
            seq.push(*it.next().unwrap());
        }
    }
    let mut nbhd: Vec<Vec<Vertex>> = vec![Vec::new(); ni];
    let len = seq.len();
    for i in 0..len {
        let x = seq[i];
        if x as usize <= nk {
            continue;
        }
        let mut adj = Vec::new();
        if i > 0 {
            adj.push(seq[i - 1]);
        }
        if i + 1 < len {
            adj.push(seq[i + 1]);
        } else if cycle {
            adj.push(seq[0]);
        }
        if cycle && i == 0 {
            adj.push(seq[len - 1]);
        }
        nbhd[x as usize - nk - 1] = adj;
    }
    for nb in nbhd.iter_mut() {
        for w in 1..=nk as Vertex {
            if nb.len() + 1 < nk && !nb.contains(&w) && rng.random_bool(0.15) {
                nb.push(w);
            }
        }
        nb.sort_unstable();
        nb.dedup();
    }
    let g = assemble(nk, &nbhd);
    if !is_connected(&g) {
        return Err(infeasible("planted graph is disconnected"));
    }
    Ok(finish(g, Some(Planted { sequence: seq, cycle })))
}

/// Generic induced-star check used by tests of the generators.
pub fn has_induced_star(g: &Graph, t: usize) -> bool {
    find_star(g, t).is_some()
}
