//! Exact search for graphs with few independent-side vertices.
//!
//! A Hamiltonian path of a split graph splits into maximal "chains"
//! `k0 u1 k1 u2 ... um km` that alternate between I and K, glued together by
//! clique edges. Chains are enumerated over the independent side; the clique
//! vertices they need ("ports") are assigned by incremental bipartite
//! matching. Unused clique vertices are slotted in at any clique-clique joint.

use crate::graph::{Graph, Vertex};
use crate::split::SplitPartition;
use std::collections::HashSet;
use thiserror::Error;

pub const TRACE_CLAIM: &str = "SmallI";
pub const DEFAULT_THRESHOLD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmallIError {
    #[error("independent side has {0} vertices, above the limit {1}")]
    IToLarge(usize, usize),
    #[error("search node budget exhausted")]
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Path,
    Cycle,
}

pub fn search(g: &Graph, p: &SplitPartition, mode: Mode) -> Result<Option<Vec<Vertex>>, SmallIError> {
    search_with(g, p, mode, DEFAULT_THRESHOLD, u64::MAX)
}

pub fn search_with(
    g: &Graph,
    p: &SplitPartition,
    mode: Mode,
    max_i: usize,
    max_nodes: u64,
) -> Result<Option<Vec<Vertex>>, SmallIError> {
    let r = p.i_len();
    if r > max_i.min(31) {
        return Err(SmallIError::IToLarge(r, max_i.min(31)));
    }
    let k = p.k_len();
    let n = g.n();
    if r == 0 {
        let ok = match mode {
            Mode::Path => true,
            Mode::Cycle => k >= 3,
        };
        return Ok(ok.then(|| p.clique.clone()));
    }
    if mode == Mode::Cycle && n < 3 {
        return Ok(None);
    }
    let mut kidx = vec![u32::MAX; n + 1];
    for (i, &v) in p.clique.iter().enumerate() {
        kidx[v as usize] = i as u32;
    }
    let ports: Vec<Vec<u32>> = p
        .independent
        .iter()
        .map(|&u| g.neighbors(u).iter().map(|&w| kidx[w as usize]).collect())
        .collect();
    if ports.iter().any(|s| s.is_empty()) {
        return Ok(None);
    }
    let mut shared = vec![Vec::new(); r * r];
    for a in 0..r {
        for b in a + 1..r {
            let s = intersect(&ports[a], &ports[b]);
            shared[a * r + b] = s.clone();
            shared[b * r + a] = s;
        }
    }
    let mut s = Search {
        r,
        k,
        mode,
        ports,
        shared,
        owner: vec![NONE; k],
        assign: Vec::new(),
        demand_key: Vec::new(),
        log: Vec::new(),
        stamp: vec![0; k],
        epoch: 0,
        chains: Vec::new(),
        failed: HashSet::new(),
        nodes: 0,
        max_nodes,
    };
    let found = match mode {
        Mode::Path => s.phase_a()?,
        Mode::Cycle => s.phase_c()? || s.wrap_cycle()?,
    };
    if !found {
        return Ok(None);
    }
    Ok(Some(s.assemble(p)))
}

fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// one I end (at the front of `verts`), one K end
    OneI,
    /// both ends I; the whole path
    BothI,
    KK,
    /// closes on itself through a shared port (cycle mode only)
    Wrap,
}

#[derive(Debug, Clone)]
struct Chain {
    kind: Kind,
    verts: Vec<usize>,
    /// demand ids in walking order: [left port], shared ports, [right port]
    demands: Vec<usize>,
}

enum Log {
    Owner(u32, u32),
    Assign(usize, u32),
}

struct Search {
    r: usize,
    k: usize,
    mode: Mode,
    ports: Vec<Vec<u32>>,
    shared: Vec<Vec<u32>>,
    owner: Vec<u32>,
    assign: Vec<u32>,
    /// memo key per demand: `a` for N(a), `r + a*r + b` for a shared port
    demand_key: Vec<u16>,
    log: Vec<Log>,
    stamp: Vec<u32>,
    epoch: u32,
    chains: Vec<Chain>,
    failed: HashSet<(u32, u8, Vec<u16>)>,
    nodes: u64,
    max_nodes: u64,
}

impl Search {
    fn tick(&mut self) -> Result<(), SmallIError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(SmallIError::BudgetExceeded);
        }
        Ok(())
    }

    fn demand_set(&self, key: u16) -> &[u32] {
        let key = key as usize;
        if key < self.r {
            &self.ports[key]
        } else {
            &self.shared[key - self.r]
        }
    }

    fn used_mask(&self) -> u32 {
        self.chains.iter().flat_map(|c| c.verts.iter()).fold(0, |m, &v| m | 1 << v)
    }

    /// Add a demand; false (and nothing changed) if no matching exists.
    fn push_demand(&mut self, key: u16) -> bool {
        let d = self.assign.len();
        self.assign.push(NONE);
        self.demand_key.push(key);
        self.epoch += 1;
        let mark = self.log.len();
        if self.augment(d) {
            true
        } else {
            self.undo_to(mark);
            self.assign.pop();
            self.demand_key.pop();
            false
        }
    }

    fn pop_demand(&mut self, mark: usize) {
        self.undo_to(mark);
        self.assign.pop();
        self.demand_key.pop();
    }

    fn undo_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            match self.log.pop().unwrap() {
                Log::Owner(k, old) => self.owner[k as usize] = old,
                Log::Assign(d, old) => self.assign[d] = old,
            }
        }
    }

    fn augment(&mut self, d: usize) -> bool {
        let key = self.demand_key[d];
        let len = self.demand_set(key).len();
        for i in 0..len {
            let kv = self.demand_set(key)[i];
            if self.stamp[kv as usize] == self.epoch {
                continue;
            }
            self.stamp[kv as usize] = self.epoch;
            let holder = self.owner[kv as usize];
            if holder == NONE || self.augment(holder as usize) {
                self.log.push(Log::Owner(kv, self.owner[kv as usize]));
                self.owner[kv as usize] = d as u32;
                self.log.push(Log::Assign(d, self.assign[d]));
                self.assign[d] = kv;
                return true;
            }
        }
        false
    }

    /// Run `f` with demand `key` pushed; restores state afterwards unless `f` succeeds.
    fn with_demand(
        &mut self,
        key: u16,
        f: &mut dyn FnMut(&mut Search) -> Result<bool, SmallIError>,
    ) -> Result<bool, SmallIError> {
        let mark = self.log.len();
        if !self.push_demand(key) {
            return Ok(false);
        }
        if f(self)? {
            return Ok(true);
        }
        self.pop_demand(mark);
        Ok(false)
    }

    fn port_key(&self, a: usize) -> u16 {
        a as u16
    }

    fn shared_key(&self, a: usize, b: usize) -> u16 {
        let (a, b) = (a.min(b), a.max(b));
        (self.r + a * self.r + b) as u16
    }

    fn memo_key(&self, phase: u8) -> (u32, u8, Vec<u16>) {
        let mut d = self.demand_key.clone();
        d.sort_unstable();
        (self.used_mask(), phase, d)
    }

    fn leftovers(&self) -> usize {
        self.k - self.assign.len()
    }

    fn any_k_end(&self) -> bool {
        self.chains.iter().any(|c| c.kind == Kind::OneI || c.kind == Kind::KK)
    }

    // Phase A: optional chain with an I end, grown rightwards from that end.
    fn phase_a(&mut self) -> Result<bool, SmallIError> {
        self.tick()?;
        if self.phase_c()? {
            return Ok(true);
        }
        for x in 0..self.r {
            self.chains.push(Chain { kind: Kind::OneI, verts: vec![x], demands: Vec::new() });
            if self.grow_one_i(true)? {
                return Ok(true);
            }
            self.chains.pop();
        }
        Ok(false)
    }

    /// Extend the last chain (one I end) to the right, or close it.
    fn grow_one_i(&mut self, is_a: bool) -> Result<bool, SmallIError> {
        self.tick()?;
        let used = self.used_mask();
        let all = (1u32 << self.r) - 1;
        let cur = *self.chains.last().unwrap().verts.last().unwrap();
        if is_a && used == all {
            // both ends I: this chain is the whole path
            self.chains.last_mut().unwrap().kind = Kind::BothI;
            if self.leftovers() == 0 && self.chains.len() == 1 && self.r + self.k > 1 {
                return Ok(true);
            }
            self.chains.last_mut().unwrap().kind = Kind::OneI;
        }
        // close with a K end
        let key = self.port_key(cur);
        let closed = self.with_demand(key, &mut |s| {
            s.chains.last_mut().unwrap().demands.push(s.assign.len() - 1);
            let ok = if is_a { s.phase_b()? } else { s.phase_c()? };
            if !ok {
                s.chains.last_mut().unwrap().demands.pop();
            }
            Ok(ok)
        })?;
        if closed {
            return Ok(true);
        }
        for v in 0..self.r {
            if used >> v & 1 == 1 || self.shared[cur * self.r + v].is_empty() {
                continue;
            }
            let key = self.shared_key(cur, v);
            let ok = self.with_demand(key, &mut |s| {
                let c = s.chains.last_mut().unwrap();
                c.demands.push(s.assign.len() - 1);
                c.verts.push(v);
                let ok = s.grow_one_i(is_a)?;
                if !ok {
                    let c = s.chains.last_mut().unwrap();
                    c.verts.pop();
                    c.demands.pop();
                }
                Ok(ok)
            })?;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    // Phase B: optional second chain with an I end (its I end larger than A's).
    fn phase_b(&mut self) -> Result<bool, SmallIError> {
        self.tick()?;
        if self.phase_c()? {
            return Ok(true);
        }
        let a_start = self.chains[0].verts[0];
        let used = self.used_mask();
        for y in a_start + 1..self.r {
            if used >> y & 1 == 1 {
                continue;
            }
            self.chains.push(Chain { kind: Kind::OneI, verts: vec![y], demands: Vec::new() });
            if self.grow_one_i(false)? {
                return Ok(true);
            }
            self.chains.pop();
        }
        Ok(false)
    }

    // Phase C: chains with two K ends, each containing the smallest unused vertex.
    fn phase_c(&mut self) -> Result<bool, SmallIError> {
        self.tick()?;
        let used = self.used_mask();
        let all = (1u32 << self.r) - 1;
        if used == all {
            return Ok(match self.mode {
                Mode::Path => self.leftovers() == 0 || self.any_k_end(),
                Mode::Cycle => self.any_k_end(),
            });
        }
        // a vertex with one neighbour can only be an I end
        if (0..self.r).any(|v| used >> v & 1 == 0 && self.ports[v].len() < 2) {
            return Ok(false);
        }
        let key = self.memo_key(b'C');
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let s0 = (0..self.r).find(|&v| used >> v & 1 == 0).unwrap();
        self.chains.push(Chain { kind: Kind::KK, verts: vec![s0], demands: Vec::new() });
        let ok = self.grow_kk(false)?;
        if !ok {
            self.chains.pop();
            self.failed.insert(key);
        }
        Ok(ok)
    }

    /// Grow the current K-K chain: first rightwards from its seed, then leftwards.
    fn grow_kk(&mut self, turned: bool) -> Result<bool, SmallIError> {
        self.tick()?;
        let used = self.used_mask();
        if !turned {
            for v in 0..self.r {
                let cur = *self.chains.last().unwrap().verts.last().unwrap();
                if used >> v & 1 == 1 || self.shared[cur * self.r + v].is_empty() {
                    continue;
                }
                let key = self.shared_key(cur, v);
                let ok = self.with_demand(key, &mut |s| {
                    let c = s.chains.last_mut().unwrap();
                    c.demands.push(s.assign.len() - 1);
                    c.verts.push(v);
                    let ok = s.grow_kk(false)?;
                    if !ok {
                        let c = s.chains.last_mut().unwrap();
                        c.verts.pop();
                        c.demands.pop();
                    }
                    Ok(ok)
                })?;
                if ok {
                    return Ok(true);
                }
            }
            return self.grow_kk(true);
        }
        // close: ports at both ends
        let (first, last) = {
            let c = self.chains.last().unwrap();
            (c.verts[0], *c.verts.last().unwrap())
        };
        let lk = self.port_key(first);
        let rk = self.port_key(last);
        let closed = self.with_demand(lk, &mut |s| {
            let dl = s.assign.len() - 1;
            s.with_demand(rk, &mut |s| {
                let dr = s.assign.len() - 1;
                let c = s.chains.last_mut().unwrap();
                c.demands.insert(0, dl);
                c.demands.push(dr);
                let ok = s.phase_c()?;
                if !ok {
                    let c = s.chains.last_mut().unwrap();
                    c.demands.remove(0);
                    c.demands.pop();
                }
                Ok(ok)
            })
        })?;
        if closed {
            return Ok(true);
        }
        for v in 0..self.r {
            let front = self.chains.last().unwrap().verts[0];
            if used >> v & 1 == 1 || self.shared[front * self.r + v].is_empty() {
                continue;
            }
            let key = self.shared_key(v, front);
            let ok = self.with_demand(key, &mut |s| {
                let d = s.assign.len() - 1;
                let c = s.chains.last_mut().unwrap();
                c.demands.insert(0, d);
                c.verts.insert(0, v);
                let ok = s.grow_kk(true)?;
                if !ok {
                    let c = s.chains.last_mut().unwrap();
                    c.verts.remove(0);
                    c.demands.remove(0);
                }
                Ok(ok)
            })?;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Cycle made of one chain closing through a shared port, no spare K vertices.
    fn wrap_cycle(&mut self) -> Result<bool, SmallIError> {
        if self.r < 2 || self.r != self.k {
            return Ok(false);
        }
        self.chains.clear();
        self.chains.push(Chain { kind: Kind::Wrap, verts: vec![0], demands: Vec::new() });
        self.grow_wrap()
    }

    fn grow_wrap(&mut self) -> Result<bool, SmallIError> {
        self.tick()?;
        let used = self.used_mask();
        let cur = *self.chains[0].verts.last().unwrap();
        if used == (1u32 << self.r) - 1 {
            if self.shared[cur * self.r].is_empty() {
                return Ok(false);
            }
            let key = self.shared_key(cur, 0);
            return self.with_demand(key, &mut |s| {
                s.chains[0].demands.push(s.assign.len() - 1);
                Ok(true)
            });
        }
        for v in 1..self.r {
            if used >> v & 1 == 1 || self.shared[cur * self.r + v].is_empty() {
                continue;
            }
            let key = self.shared_key(cur, v);
            let ok = self.with_demand(key, &mut |s| {
                s.chains[0].demands.push(s.assign.len() - 1);
                s.chains[0].verts.push(v);
                let ok = s.grow_wrap()?;
                if !ok {
                    s.chains[0].verts.pop();
                    s.chains[0].demands.pop();
                }
                Ok(ok)
            })?;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn assemble(&self, p: &SplitPartition) -> Vec<Vertex> {
        let kv = |d: usize| p.clique[self.assign[d] as usize];
        let iv = |i: usize| p.independent[i];
        let walk = |c: &Chain| -> Vec<Vertex> {
            let mut out = Vec::new();
            let mut d = c.demands.iter();
            if c.kind == Kind::KK {
                out.push(kv(*d.next().unwrap()));
            }
            for (j, &u) in c.verts.iter().enumerate() {
                out.push(iv(u));
                if j + 1 < c.verts.len() || matches!(c.kind, Kind::KK | Kind::OneI | Kind::Wrap) {
                    out.push(kv(*d.next().unwrap()));
                }
            }
            out
        };
        let mut spare = vec![true; self.k];
        for &a in &self.assign {
            spare[a as usize] = false;
        }
        let spare: Vec<Vertex> = (0..self.k).filter(|&i| spare[i]).map(|i| p.clique[i]).collect();
        let ones: Vec<&Chain> = self.chains.iter().filter(|c| c.kind == Kind::OneI).collect();
        let kks = self.chains.iter().filter(|c| c.kind == Kind::KK);
        let mut seq = Vec::new();
        match self.chains[0].kind {
            Kind::BothI | Kind::Wrap => return walk(&self.chains[0]),
            _ => {}
        }
        if self.mode == Mode::Cycle {
            for c in kks {
                seq.extend(walk(c));
            }
            seq.extend(spare);
            return seq;
        }
        if let Some(a) = ones.first() {
            seq.extend(walk(a));
            seq.extend(spare.iter().copied());
        } else {
            seq.extend(spare.iter().copied());
        }
        for c in kks {
            seq.extend(walk(c));
        }
        if let Some(b) = ones.get(1) {
            let mut w = walk(b);
            w.reverse();
            seq.extend(w);
        }
        seq
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, is_hamiltonian_cycle, is_hamiltonian_path};
    use crate::oracle::{enumerate_split_classes, ham_cycle_oracle, ham_path_oracle, OracleBudget};
    use crate::split::split_partition;

    #[test]
    fn agrees_with_oracle_on_all_small_classes() {
        let b = OracleBudget::default();
        for n in 1..=7 {
            for g in enumerate_split_classes(n) {
                let p = split_partition(&g).unwrap();
                let want = ham_path_oracle(&g, &b).unwrap().is_some();
                let got = search(&g, &p, Mode::Path).unwrap();
                assert_eq!(got.is_some(), want, "path {:?}", g);
                if let Some(path) = got {
                    assert!(is_hamiltonian_path(&g, &path), "{path:?} on {g:?}");
                }
                if n >= 3 {
                    let want = ham_cycle_oracle(&g, &b).unwrap().is_some();
                    let got = search(&g, &p, Mode::Cycle).unwrap();
                    assert_eq!(got.is_some(), want, "cycle {:?}", g);
                    if let Some(c) = got {
                        assert!(is_hamiltonian_cycle(&g, &c), "{c:?} on {g:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn pendant_trio_has_no_path() {
        let g = build_graph(5, &[(1, 2), (3, 1), (4, 1), (5, 2)]).unwrap();
        let p = SplitPartition::from_sets(5, &[1, 2], &[3, 4, 5]);
        assert_eq!(search(&g, &p, Mode::Path).unwrap(), None);
    }

    #[test]
    fn threshold_enforced() {
        let mut e = Vec::new();
        for u in 14..=26 {
            e.push((1, u));
        }
        for a in 1..=13 {
            for b in a + 1..=13 {
                e.push((a, b));
            }
        }
        let g = build_graph(26, &e).unwrap();
        let p = split_partition(&g).unwrap();
        assert!(matches!(search(&g, &p, Mode::Path), Err(SmallIError::IToLarge(13, 12))));
    }
}
