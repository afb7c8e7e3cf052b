//! Canonical labelling of vertex-coloured graphs by partition refinement and
//! a backtracking search over individualisations.
//!
//! The certificate of a graph is the lexicographically least relabelled
//! (colours, adjacency) over all leaves of the search tree; two coloured
//! graphs are isomorphic iff their certificates are equal.

use std::collections::VecDeque;

/// Result of [`canonical_form`].
#[derive(Clone, Debug)]
pub struct Canonical {
    pub certificate: Vec<u64>,
    /// `labeling[i]` is the vertex placed at position `i`.
    pub labeling: Vec<u32>,
    /// Automorphisms discovered during the search (as vertex maps).
    pub automorphisms: Vec<Vec<u32>>,
}

#[derive(Clone)]
struct Partition {
    order: Vec<u32>,
    pos: Vec<u32>,
    /// For a cell starting at `s`, `end[s]` is one past its last slot.
    end: Vec<u32>,
    cell_of: Vec<u32>,
}

impl Partition {
    fn from_colours(colour: &[u64]) -> (Self, Vec<u32>) {
        let n = colour.len();
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by_key(|&v| (colour[v as usize], v));
        let mut end = vec![0u32; n];
        let mut cell_of = vec![0u32; n];
        let mut starts = Vec::new();
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && colour[order[e] as usize] == colour[order[s] as usize] {
                e += 1;
            }
            end[s] = e as u32;
            for &v in &order[s..e] {
                cell_of[v as usize] = s as u32;
            }
            starts.push(s as u32);
            s = e;
        }
        let mut pos = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        (Partition { order, pos, end, cell_of }, starts)
    }

    fn is_discrete(&self) -> bool {
        let n = self.order.len();
        let mut s = 0;
        while s < n {
            if self.end[s] as usize != s + 1 {
                return false;
            }
            s += 1;
        }
        true
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<u32> {
        let n = self.order.len();
        let mut best: Option<(u32, u32)> = None;
        let mut s = 0;
        while s < n {
            let e = self.end[s] as usize;
            let size = (e - s) as u32;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s as u32, size));
            }
            s = e;
        }
        best.map(|(s, _)| s)
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, using the queued cells as splitters.
    fn refine(&mut self, adj: &[Vec<u32>], mut queue: VecDeque<u32>) {
        let n = self.order.len();
        let mut queued = vec![false; n];
        for &s in &queue {
            queued[s as usize] = true;
        }
        let mut cnt = vec![0u32; n];
        let mut touched_v: Vec<u32> = Vec::new();
        let mut touched_c: Vec<u32> = Vec::new();
        while let Some(s) = queue.pop_front() {
            queued[s as usize] = false;
            let e = self.end[s as usize] as usize;
            for i in s as usize..e {
                let w = self.order[i];
                for &v in &adj[w as usize] {
                    if cnt[v as usize] == 0 {
                        touched_v.push(v);
                    }
                    cnt[v as usize] += 1;
                }
            }
            for &v in &touched_v {
                touched_c.push(self.cell_of[v as usize]);
            }
            touched_c.sort_unstable();
            touched_c.dedup();
            for &c in &touched_c {
                let (cs, ce) = (c as usize, self.end[c as usize] as usize);
                if ce - cs == 1 {
                    continue;
                }
                let members = &self.order[cs..ce];
                let lo = members.iter().map(|&v| cnt[v as usize]).min().unwrap();
                let hi = members.iter().map(|&v| cnt[v as usize]).max().unwrap();
                if lo == hi {
                    continue;
                }
                self.order[cs..ce].sort_by_key(|&v| (cnt[v as usize], v));
                let c_was_queued = queued[cs];
                let mut pieces = Vec::new();
                let mut i = cs;
                while i < ce {
                    let k = cnt[self.order[i] as usize];
                    let mut j = i + 1;
                    while j < ce && cnt[self.order[j] as usize] == k {
                        j += 1;
                    }
                    pieces.push((i, j));
                    i = j;
                }
                for &(ps, pe) in &pieces {
                    self.end[ps] = pe as u32;
                    for idx in ps..pe {
                        let v = self.order[idx];
                        self.cell_of[v as usize] = ps as u32;
                        self.pos[v as usize] = idx as u32;
                    }
                }
                // Hopcroft's rule: if the old cell was not pending, the
                // largest piece may be skipped.
                let skip = if c_was_queued {
                    usize::MAX
                } else {
                    let mut best = 0;
                    for (k, &(ps, pe)) in pieces.iter().enumerate() {
                        if pe - ps > pieces[best].1 - pieces[best].0 {
                            best = k;
                        }
                    }
                    best
                };
                for (k, &(ps, _)) in pieces.iter().enumerate() {
                    if k != skip && !queued[ps] {
                        queued[ps] = true;
                        queue.push_back(ps as u32);
                    }
                }
            }
            for &v in &touched_v {
                cnt[v as usize] = 0;
            }
            touched_v.clear();
            touched_c.clear();
        }
    }

    /// Splits `v` off the front of its cell and refines.
    fn individualise(&self, v: u32, adj: &[Vec<u32>]) -> Partition {
        let mut p = self.clone();
        let s = p.cell_of[v as usize] as usize;
        let e = p.end[s] as usize;
        let i = p.pos[v as usize] as usize;
        p.order.swap(s, i);
        let (a, b) = (p.order[s], p.order[i]);
        p.pos[a as usize] = s as u32;
        p.pos[b as usize] = i as u32;
        p.end[s] = s as u32 + 1;
        p.end[s + 1] = e as u32;
        for idx in s + 1..e {
            let w = p.order[idx];
            p.cell_of[w as usize] = s as u32 + 1;
        }
        p.refine(adj, VecDeque::from([s as u32]));
        p
    }
}

fn certificate(labeling: &[u32], colour: &[u64], adj: &[Vec<u32>]) -> Vec<u64> {
    let n = labeling.len();
    let mut pos = vec![0u32; n];
    for (i, &v) in labeling.iter().enumerate() {
        pos[v as usize] = i as u32;
    }
    let mut cert = Vec::with_capacity(2 * n + adj.iter().map(Vec::len).sum::<usize>());
    cert.push(n as u64);
    for &v in labeling {
        cert.push(colour[v as usize]);
    }
    let mut row = Vec::new();
    for &v in labeling {
        row.clear();
        row.extend(adj[v as usize].iter().map(|&w| pos[w as usize] as u64));
        row.sort_unstable();
        cert.push(row.len() as u64);
        cert.extend_from_slice(&row);
    }
    cert
}

struct Search<'a> {
    colour: &'a [u64],
    adj: &'a [Vec<u32>],
    first: Option<(Vec<u32>, Vec<u64>)>,
    best: Option<(Vec<u32>, Vec<u64>)>,
    auts: Vec<Vec<u32>>,
}

fn find(uf: &mut [u32], x: u32) -> u32 {
    let mut r = x;
    while uf[r as usize] != r {
        r = uf[r as usize];
    }
    let mut y = x;
    while uf[y as usize] != r {
        let next = uf[y as usize];
        uf[y as usize] = r;
        y = next;
    }
    r
}

impl Search<'_> {
    fn leaf(&mut self, labeling: Vec<u32>) {
        let cert = certificate(&labeling, self.colour, self.adj);
        if self.first.is_none() {
            self.first = Some((labeling.clone(), cert.clone()));
            self.best = Some((labeling, cert));
            return;
        }
        for reference in [&self.first, &self.best] {
            let (lab, c) = reference.as_ref().unwrap();
            if *c == cert {
                let mut map = vec![0u32; labeling.len()];
                for i in 0..labeling.len() {
                    map[lab[i] as usize] = labeling[i];
                }
                if map.iter().enumerate().any(|(i, &m)| m as usize != i) && !self.auts.contains(&map) {
                    self.auts.push(map);
                }
                return;
            }
        }
        if cert < self.best.as_ref().unwrap().1 {
            self.best = Some((labeling, cert));
        }
    }

    fn visit(&mut self, p: &Partition, prefix: &mut Vec<u32>) {
        if p.is_discrete() {
            self.leaf(p.order.clone());
            return;
        }
        let t = p.target_cell().unwrap() as usize;
        let mut cands: Vec<u32> = p.order[t..p.end[t] as usize].to_vec();
        cands.sort_unstable();
        let mut explored: Vec<u32> = Vec::new();
        for v in cands {
            if !explored.is_empty() {
                let n = p.order.len();
                let mut uf: Vec<u32> = (0..n as u32).collect();
                for a in &self.auts {
                    if prefix.iter().all(|&x| a[x as usize] == x) {
                        for (x, &y) in a.iter().enumerate() {
                            let (rx, ry) = (find(&mut uf, x as u32), find(&mut uf, y));
                            if rx != ry {
                                uf[rx.max(ry) as usize] = rx.min(ry);
                            }
                        }
                    }
                }
                let rv = find(&mut uf, v);
                if explored.iter().any(|&w| find(&mut uf, w) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let child = p.individualise(v, self.adj);
            prefix.push(v);
            self.visit(&child, prefix);
            prefix.pop();
        }
    }
}

/// Canonical form of the graph with vertex colours `colour` and symmetric
/// adjacency lists `adj` (no self entries).
pub fn canonical_form(colour: &[u64], adj: &[Vec<u32>]) -> Canonical {
    let n = colour.len();
    if n == 0 {
        return Canonical { certificate: vec![0], labeling: Vec::new(), automorphisms: Vec::new() };
    }
    let (mut p, starts) = Partition::from_colours(colour);
    p.refine(adj, starts.into_iter().collect());
    let mut s = Search { colour, adj, first: None, best: None, auts: Vec::new() };
    s.visit(&p, &mut Vec::new());
    let (labeling, certificate) = s.best.unwrap();
    Canonical { certificate, labeling, automorphisms: s.auts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }

    fn permuted(adj: &[Vec<u32>], perm: &[u32]) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); adj.len()];
        for (u, row) in adj.iter().enumerate() {
            out[perm[u] as usize] = row.iter().map(|&v| perm[v as usize]).collect();
        }
        out
    }

    #[test]
    fn invariant_under_relabelling() {
        let petersen: Vec<(u32, u32)> = vec![
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ];
        let adj = lists(10, &petersen);
        let c = canonical_form(&[0; 10], &adj);
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        let c2 = canonical_form(&[0; 10], &permuted(&adj, &perm));
        assert_eq!(c.certificate, c2.certificate);
    }

    #[test]
    fn distinguishes() {
        let c6 = lists(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_c3 = lists(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_ne!(canonical_form(&[0; 6], &c6).certificate, canonical_form(&[0; 6], &two_c3).certificate);
        let path = lists(3, &[(0, 1), (1, 2)]);
        assert_ne!(canonical_form(&[0, 0, 1], &path).certificate, canonical_form(&[0, 1, 0], &path).certificate);
        assert_eq!(canonical_form(&[1, 0, 0], &path).certificate, canonical_form(&[0, 0, 1], &path).certificate);
    }
}
