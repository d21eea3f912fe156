//! Guided search over path-collection pieces, used where no explicit
//! construction is available.
//!
//! The Hamiltonian path is assembled from "items" (pieces with an end in I:
//! the three removed neighbours, I-K paths, and pieces created by cutting a
//! long path) glued together through "ports" (paths with both ends in K).
//! Ports are assigned by incremental bipartite matching; ports left over are
//! dropped into any clique-clique joint at the end.

use super::delta3::V3Context;
use super::small_i::{self, Mode};
use super::SolveError;
use crate::graph::{Graph, Vertex};
use crate::split::SplitPartition;
use std::collections::{HashMap, HashSet};

const NONE: u32 = u32::MAX;
const ITEM_LIMIT: usize = 9;
const ENGINE_NODES: u64 = 400_000;
const EXACT_I_LIMIT: usize = 16;
const EXACT_NODES: u64 = 5_000_000;

pub fn certified_guided_search(ctx: &V3Context, g: &Graph, p: &SplitPartition) -> Result<Vec<Vertex>, SolveError> {
    let r = crate::structure::structure_report(g, p)?;
    if !r.property_a {
        return Err(SolveError::PreconditionViolated("guided search needs Property A"));
    }
    guided_search(ctx, g, p)
}

/// The search proper, without re-checking Property A.
pub(crate) fn guided_search(ctx: &V3Context, g: &Graph, p: &SplitPartition) -> Result<Vec<Vertex>, SolveError> {
    let pieces: Vec<Vec<Vertex>> = ctx.collection.paths.clone();
    // long paths may be cut at I-K edges; at most two cuts
    let cuttable: Vec<(usize, usize)> = pieces
        .iter()
        .enumerate()
        .filter(|(_, s)| s.len() >= 4)
        .flat_map(|(i, s)| (0..s.len() - 1).map(move |j| (i, j)))
        .collect();
    let mut cut_sets: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    cut_sets.extend(cuttable.iter().map(|&c| vec![c]));
    for (a, &c1) in cuttable.iter().enumerate() {
        for &c2 in &cuttable[a + 1..] {
            cut_sets.push(vec![c1, c2]);
        }
    }
    for cuts in &cut_sets {
        let mut segs = Vec::new();
        for (i, s) in pieces.iter().enumerate() {
            let mut at: Vec<usize> = cuts.iter().filter(|c| c.0 == i).map(|c| c.1 + 1).collect();
            at.sort_unstable();
            let mut start = 0;
            for &c in &at {
                segs.push(s[start..c].to_vec());
                start = c;
            }
            segs.push(s[start..].to_vec());
        }
        for &x in &ctx.nv {
            segs.push(vec![x]);
        }
        if let Some(path) = assemble(g, p, segs) {
            return Ok(path);
        }
    }
    if p.i_len() <= EXACT_I_LIMIT {
        if let Ok(Some(path)) = small_i::search_with(g, p, Mode::Path, EXACT_I_LIMIT, EXACT_NODES) {
            return Ok(path);
        }
    }
    Err(SolveError::SearchExhausted)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
enum Demand {
    /// a port with an end adjacent to the vertex
    End(Vertex),
    /// a port from the first vertex to the second
    Bridge(Vertex, Vertex),
}

#[derive(Clone, Copy, Debug)]
enum Joint {
    Free,
    Direct,
    /// a port hangs off the left item's right end
    PortLeft(usize),
    /// a port precedes the right item's left end
    PortRight(usize),
    Bridge(usize),
    Split(usize, usize),
}

#[derive(Clone, Copy, Debug)]
enum Cap {
    Open,
    HpEnd,
    Port(usize),
}

struct Engine<'a> {
    g: &'a Graph,
    p: &'a SplitPartition,
    items: Vec<Vec<Vertex>>,
    ports: Vec<Vec<Vertex>>,
    port_of_end: HashMap<Vertex, u32>,
    sets: HashMap<Demand, Vec<u32>>,
    owner: Vec<u32>,
    assign: Vec<u32>,
    keys: Vec<Demand>,
    log: Vec<(bool, usize, u32)>,
    stamp: Vec<u32>,
    epoch: u32,
    // (item, reversed, joint before it)
    placed: Vec<(usize, bool, Joint)>,
    head: Cap,
    tail: Cap,
    failed: HashSet<(u32, usize, bool, u8, Vec<Demand>)>,
    nodes: u64,
}

fn assemble(g: &Graph, p: &SplitPartition, segs: Vec<Vec<Vertex>>) -> Option<Vec<Vertex>> {
    let mut items = Vec::new();
    let mut ports = Vec::new();
    for s in segs {
        if p.in_k(s[0]) && p.in_k(s[s.len() - 1]) {
            ports.push(s);
        } else {
            items.push(s);
        }
    }
    if items.is_empty() {
        let mut seq: Vec<Vertex> = ports.concat();
        seq.dedup();
        return (seq.len() == g.n()).then_some(seq);
    }
    if items.len() > ITEM_LIMIT {
        return None;
    }
    let mut port_of_end = HashMap::new();
    for (i, s) in ports.iter().enumerate() {
        port_of_end.insert(s[0], i as u32);
        port_of_end.insert(s[s.len() - 1], i as u32);
    }
    let np = ports.len();
    let mut e = Engine {
        g,
        p,
        items,
        ports,
        port_of_end,
        sets: HashMap::new(),
        owner: vec![NONE; np],
        assign: Vec::new(),
        keys: Vec::new(),
        log: Vec::new(),
        stamp: vec![0; np],
        epoch: 0,
        placed: Vec::new(),
        head: Cap::Open,
        tail: Cap::Open,
        failed: HashSet::new(),
        nodes: 0,
    };
    if e.start() {
        e.build()
    } else {
        None
    }
}

impl<'a> Engine<'a> {
    fn is_i(&self, v: Vertex) -> bool {
        self.p.in_i(v)
    }

    fn ends(&self, item: usize, rev: bool) -> (Vertex, Vertex) {
        let s = &self.items[item];
        let (a, b) = (s[0], s[s.len() - 1]);
        if rev {
            (b, a)
        } else {
            (a, b)
        }
    }

    fn set(&mut self, d: Demand) -> &Vec<u32> {
        if !self.sets.contains_key(&d) {
            let g = self.g;
            let mut out: Vec<u32> = Vec::new();
            let a = match d {
                Demand::End(a) | Demand::Bridge(a, _) => a,
            };
            for &w in g.neighbors(a) {
                if let Some(&pid) = self.port_of_end.get(&w) {
                    let ok = match d {
                        Demand::End(_) => true,
                        Demand::Bridge(_, b) => {
                            let s = &self.ports[pid as usize];
                            let other = if s[0] == w { s[s.len() - 1] } else { s[0] };
                            g.has_edge(other, b)
                        }
                    };
                    if ok {
                        out.push(pid);
                    }
                }
            }
            out.sort_unstable();
            out.dedup();
            self.sets.insert(d, out);
        }
        &self.sets[&d]
    }

    fn push(&mut self, d: Demand) -> Option<usize> {
        self.set(d);
        let idx = self.assign.len();
        self.assign.push(NONE);
        self.keys.push(d);
        self.epoch += 1;
        let mark = self.log.len();
        if self.augment(idx) {
            Some(mark)
        } else {
            self.undo(mark);
            self.assign.pop();
            self.keys.pop();
            None
        }
    }

    fn pop(&mut self, mark: usize) {
        self.undo(mark);
        self.assign.pop();
        self.keys.pop();
    }

    fn undo(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (is_owner, i, old) = self.log.pop().unwrap();
            if is_owner {
                self.owner[i] = old;
            } else {
                self.assign[i] = old;
            }
        }
    }

    fn augment(&mut self, d: usize) -> bool {
        let key = self.keys[d];
        let len = self.sets[&key].len();
        for i in 0..len {
            let pid = self.sets[&key][i] as usize;
            if self.stamp[pid] == self.epoch {
                continue;
            }
            self.stamp[pid] = self.epoch;
            let holder = self.owner[pid];
            if holder == NONE || self.augment(holder as usize) {
                self.log.push((true, pid, self.owner[pid]));
                self.owner[pid] = d as u32;
                self.log.push((false, d, self.assign[d]));
                self.assign[d] = pid as u32;
                return true;
            }
        }
        false
    }

    fn used(&self) -> u32 {
        self.placed.iter().fold(0, |m, &(i, _, _)| m | 1 << i)
    }

    fn deficits(&self) -> u8 {
        matches!(self.head, Cap::HpEnd) as u8 + matches!(self.tail, Cap::HpEnd) as u8
    }

    fn start(&mut self) -> bool {
        for item in 0..self.items.len() {
            for rev in [false, true] {
                if self.items[item].len() == 1 && rev {
                    continue;
                }
                let (l, _) = self.ends(item, rev);
                self.placed.push((item, rev, Joint::Free));
                if !self.is_i(l) {
                    self.head = Cap::Open;
                    if self.step() {
                        return true;
                    }
                } else {
                    self.head = Cap::HpEnd;
                    if self.step() {
                        return true;
                    }
                    if let Some(mark) = self.push(Demand::End(l)) {
                        self.head = Cap::Port(self.assign.len() - 1);
                        if self.step() {
                            return true;
                        }
                        self.pop(mark);
                    }
                }
                self.head = Cap::Open;
                self.placed.pop();
                if self.nodes > ENGINE_NODES {
                    return false;
                }
            }
        }
        false
    }

    fn step(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > ENGINE_NODES {
            return false;
        }
        let used = self.used();
        let &(last, lrev, _) = self.placed.last().unwrap();
        let (_, r) = self.ends(last, lrev);
        if used.count_ones() as usize == self.items.len() {
            return self.close(r);
        }
        let mut key_demands = self.keys.clone();
        key_demands.sort_unstable();
        let key = (used, last, lrev, self.deficits(), key_demands);
        if self.failed.contains(&key) {
            return false;
        }
        for item in 0..self.items.len() {
            if used >> item & 1 == 1 {
                continue;
            }
            for rev in [false, true] {
                if self.items[item].len() == 1 && rev {
                    continue;
                }
                let (l, _) = self.ends(item, rev);
                if self.try_joint(r, l, item, rev) {
                    return true;
                }
            }
        }
        self.failed.insert(key);
        false
    }

    fn descend(&mut self, item: usize, rev: bool, j: Joint) -> bool {
        self.placed.push((item, rev, j));
        if self.step() {
            return true;
        }
        self.placed.pop();
        false
    }

    fn try_joint(&mut self, r: Vertex, l: Vertex, item: usize, rev: bool) -> bool {
        let (ri, li) = (self.is_i(r), self.is_i(l));
        if !ri && !li {
            return self.descend(item, rev, Joint::Free);
        }
        if ri != li && self.g.has_edge(r, l) && self.descend(item, rev, Joint::Direct) {
            return true;
        }
        if ri && li {
            if let Some(mark) = self.push(Demand::Bridge(r, l)) {
                if self.descend(item, rev, Joint::Bridge(self.assign.len() - 1)) {
                    return true;
                }
                self.pop(mark);
            }
            if let Some(m1) = self.push(Demand::End(r)) {
                let d1 = self.assign.len() - 1;
                if let Some(m2) = self.push(Demand::End(l)) {
                    if self.descend(item, rev, Joint::Split(d1, self.assign.len() - 1)) {
                        return true;
                    }
                    self.pop(m2);
                }
                self.pop(m1);
            }
            return false;
        }
        // one side is I and not adjacent: a port on the I side, free join on the other
        let (d, left) = if ri { (Demand::End(r), true) } else { (Demand::End(l), false) };
        if let Some(mark) = self.push(d) {
            let idx = self.assign.len() - 1;
            let j = if left { Joint::PortLeft(idx) } else { Joint::PortRight(idx) };
            if self.descend(item, rev, j) {
                return true;
            }
            self.pop(mark);
        }
        false
    }

    fn close(&mut self, r: Vertex) -> bool {
        if !self.is_i(r) {
            self.tail = Cap::Open;
            return self.fillers_fit();
        }
        if self.deficits() < 2 {
            self.tail = Cap::HpEnd;
            if self.fillers_fit() {
                return true;
            }
        }
        if let Some(mark) = self.push(Demand::End(r)) {
            self.tail = Cap::Port(self.assign.len() - 1);
            if self.fillers_fit() {
                return true;
            }
            self.pop(mark);
        }
        self.tail = Cap::Open;
        false
    }

    fn fillers_fit(&self) -> bool {
        if self.assign.len() == self.ports.len() {
            return true;
        }
        !matches!(self.head, Cap::HpEnd)
            || !matches!(self.tail, Cap::HpEnd)
            || self
                .placed
                .iter()
                .any(|(_, _, j)| matches!(j, Joint::Free | Joint::PortLeft(_) | Joint::PortRight(_) | Joint::Split(..)))
    }

    fn oriented(&self, d: usize, first_adj: Option<Vertex>, last_adj: Option<Vertex>) -> Vec<Vertex> {
        let s = &self.ports[self.assign[d] as usize];
        let fwd = first_adj.is_none_or(|a| self.g.has_edge(s[0], a))
            && last_adj.is_none_or(|b| self.g.has_edge(s[s.len() - 1], b));
        if fwd {
            s.clone()
        } else {
            s.iter().rev().copied().collect()
        }
    }

    fn build(&self) -> Option<Vec<Vertex>> {
        let mut seq: Vec<Vertex> = Vec::with_capacity(self.g.n());
        let item_seq = |i: usize, rev: bool| -> Vec<Vertex> {
            let mut s = self.items[i].clone();
            if rev {
                s.reverse();
            }
            s
        };
        let (first, frev, _) = self.placed[0];
        let first_seq = item_seq(first, frev);
        if let Cap::Port(d) = self.head {
            seq.extend(self.oriented(d, None, Some(first_seq[0])));
        }
        seq.extend(&first_seq);
        for &(i, rev, j) in &self.placed[1..] {
            let s = item_seq(i, rev);
            let prev = *seq.last().unwrap();
            match j {
                Joint::Free | Joint::Direct => {}
                Joint::PortLeft(d) => seq.extend(self.oriented(d, Some(prev), None)),
                Joint::PortRight(d) => seq.extend(self.oriented(d, None, Some(s[0]))),
                Joint::Bridge(d) => seq.extend(self.oriented(d, Some(prev), Some(s[0]))),
                Joint::Split(d1, d2) => {
                    seq.extend(self.oriented(d1, Some(prev), None));
                    seq.extend(self.oriented(d2, None, Some(s[0])));
                }
            }
            seq.extend(&s);
        }
        if let Cap::Port(d) = self.tail {
            let prev = *seq.last().unwrap();
            seq.extend(self.oriented(d, Some(prev), None));
        }
        let mut used = vec![false; self.ports.len()];
        for &a in &self.assign {
            used[a as usize] = true;
        }
        let fillers: Vec<Vertex> =
            (0..self.ports.len()).filter(|&i| !used[i]).flat_map(|i| self.ports[i].iter().copied()).collect();
        if !fillers.is_empty() {
            let k = |v: Vertex| self.p.in_k(v);
            if k(seq[0]) {
                let mut out = fillers;
                out.extend(seq);
                seq = out;
            } else if k(seq[seq.len() - 1]) {
                seq.extend(fillers);
            } else {
                let at = (0..seq.len() - 1).find(|&i| k(seq[i]) && k(seq[i + 1]))?;
                seq.splice(at + 1..at + 1, fillers);
            }
        }
        crate::graph::is_hamiltonian_path(self.g, &seq).then_some(seq)
    }
}
