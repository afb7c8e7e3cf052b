//! Graphs presented as blow-ups of a small weighted quotient.
//!
//! Node `i` stands for `weight[i]` vertices with identical neighbourhoods.
//! If `clique[i]` the node is adjacent to itself: its vertices are pairwise
//! adjacent and each carries a loop. Otherwise its vertices are pairwise
//! non-adjacent and loop free. Two distinct nodes are either fully joined or
//! not joined at all.
//!
//! Generation graphs have this shape with nodes indexed by the generated
//! subgroup, which keeps the statistics below independent of |G|^a.

use crate::canon::canonical_form;
use crate::simple::SimpleGraph;
use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedQuotient {
    pub weight: Vec<u128>,
    pub clique: Vec<bool>,
    /// Neighbouring nodes of each node, sorted; a clique node lists itself.
    pub rows: Vec<Vec<u32>>,
}

impl WeightedQuotient {
    pub fn len(&self) -> usize {
        self.weight.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight.is_empty()
    }

    pub fn vertex_count(&self) -> u128 {
        self.weight.iter().sum()
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&(j as u32)).is_ok()
    }

    /// Degree of any vertex of node `i`, a loop counted once.
    pub fn degree(&self, i: usize) -> u128 {
        self.rows[i].iter().map(|&j| self.weight[j as usize]).sum()
    }

    pub fn loop_count(&self) -> u128 {
        (0..self.len()).filter(|&i| self.clique[i]).map(|i| self.weight[i]).sum()
    }

    /// Number of non-loop edges.
    pub fn edge_count(&self) -> u128 {
        let s: u128 = (0..self.len()).map(|i| self.weight[i] * self.degree(i)).sum();
        (s - self.loop_count()) / 2
    }

    /// Whether some three distinct vertices are pairwise adjacent.
    pub fn has_3cycle(&self) -> bool {
        for i in 0..self.len() {
            if self.clique[i] {
                if self.weight[i] >= 3 || (self.weight[i] >= 2 && self.rows[i].len() > 1) {
                    return true;
                }
            }
        }
        let sets: Vec<FixedBitSet> = self
            .rows
            .iter()
            .map(|r| {
                let mut b = FixedBitSet::with_capacity(self.len());
                r.iter().for_each(|&j| b.insert(j as usize));
                b
            })
            .collect();
        for i in 0..self.len() {
            for &j in &self.rows[i] {
                let j = j as usize;
                if j <= i {
                    continue;
                }
                let mut common = sets[i].clone();
                common.intersect_with(&sets[j]);
                if common.ones().any(|k| k != i && k != j) {
                    return true;
                }
            }
        }
        false
    }

    /// Node 2-colouring when the blown-up graph is bipartite.
    pub fn node_colouring(&self) -> Option<Vec<u8>> {
        if self.clique.iter().any(|&c| c) {
            return None;
        }
        let mut col = vec![u8::MAX; self.len()];
        for s in 0..self.len() {
            if col[s] != u8::MAX {
                continue;
            }
            col[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in &self.rows[u] {
                    let v = v as usize;
                    if col[v] == u8::MAX {
                        col[v] = 1 - col[u];
                        q.push_back(v);
                    } else if col[v] == col[u] {
                        return None;
                    }
                }
            }
        }
        Some(col)
    }

    /// Part sizes `(smaller, larger)` of a connected bipartite graph.
    pub fn bipartition_sizes(&self) -> Option<(u128, u128)> {
        let col = self.node_colouring()?;
        let mut parts = [0u128; 2];
        for i in 0..self.len() {
            parts[col[i] as usize] += self.weight[i];
        }
        Some((parts[0].min(parts[1]), parts[0].max(parts[1])))
    }

    /// Whether some vertex is adjacent to every other vertex.
    pub fn has_universal_vertex(&self) -> bool {
        (0..self.len()).any(|i| self.is_universal(i))
    }

    pub fn is_universal(&self, i: usize) -> bool {
        (self.weight[i] == 1 || self.clique[i]) && (0..self.len()).all(|j| j == i || self.adjacent(i, j))
    }

    /// Degree multiset as `degree -> number of vertices`.
    pub fn degree_counts(&self) -> BTreeMap<u128, u128> {
        let mut m = BTreeMap::new();
        for i in 0..self.len() {
            *m.entry(self.degree(i)).or_default() += self.weight[i];
        }
        m
    }

    /// Node-level BFS distances from node `s`.
    fn node_distances(&self, s: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &self.rows[u] {
                let v = v as usize;
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// Exact diameter of the blown-up graph; `None` if disconnected.
    ///
    /// Distinct nodes are at their node distance; two vertices of one node
    /// are at distance 1 (clique) or 2 (through any neighbour).
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for s in 0..self.len() {
            let d = self.node_distances(s);
            if d.contains(&u32::MAX) {
                return None;
            }
            best = best.max(*d.iter().max().unwrap());
            if self.weight[s] >= 2 {
                let inner = if self.clique[s] {
                    1
                } else if self.rows[s].is_empty() {
                    return None;
                } else {
                    2
                };
                best = best.max(inner);
            }
        }
        Some(best)
    }

    /// Merges nodes with identical rows (after mapping). Nodes whose rows
    /// coincide have vertices with identical neighbourhoods, loops included,
    /// so the result presents the same graph with the fewest nodes.
    pub fn twin_reduced(&self) -> WeightedQuotient {
        let mut key_of: FxHashMap<(&[u32], bool), u32> = FxHashMap::default();
        let mut rep = vec![0u32; self.len()];
        let mut firsts = Vec::new();
        for i in 0..self.len() {
            let k = (self.rows[i].as_slice(), self.clique[i]);
            let next = key_of.len() as u32;
            let id = *key_of.entry(k).or_insert(next);
            if id == next {
                firsts.push(i);
            }
            rep[i] = id;
        }
        let m = firsts.len();
        let mut weight = vec![0u128; m];
        for i in 0..self.len() {
            weight[rep[i] as usize] += self.weight[i];
        }
        let mut clique = vec![false; m];
        let mut rows = vec![Vec::new(); m];
        for (new, &i) in firsts.iter().enumerate() {
            clique[new] = self.clique[i];
            let mut r: Vec<u32> = self.rows[i].iter().map(|&j| rep[j as usize]).collect();
            r.sort_unstable();
            r.dedup();
            rows[new] = r;
        }
        let reduced = WeightedQuotient { weight, clique, rows };
        if reduced.len() < self.len() {
            // Merging can make formerly distinct rows equal.
            reduced.twin_reduced()
        } else {
            reduced
        }
    }

    /// The twin quotient of an explicit graph: vertices with identical
    /// neighbourhoods (loop included) become one node.
    pub fn from_explicit(g: &SimpleGraph) -> WeightedQuotient {
        let n = g.len();
        let key = |v: u32| {
            let mut r: Vec<u32> = g.neighbors(v).to_vec();
            if g.has_loop(v) {
                r.push(v);
                r.sort_unstable();
            }
            r
        };
        let mut id_of: FxHashMap<Vec<u32>, u32> = FxHashMap::default();
        let mut node = vec![0u32; n];
        let mut firsts = Vec::new();
        for v in 0..n as u32 {
            let k = key(v);
            let next = id_of.len() as u32;
            let id = *id_of.entry(k).or_insert(next);
            if id == next {
                firsts.push(v);
            }
            node[v as usize] = id;
        }
        let m = firsts.len();
        let mut weight = vec![0u128; m];
        for v in 0..n {
            weight[node[v] as usize] += 1;
        }
        let mut rows = vec![Vec::new(); m];
        let mut clique = vec![false; m];
        for (i, &v) in firsts.iter().enumerate() {
            clique[i] = g.has_loop(v);
            let mut r: Vec<u32> = g.neighbors(v).iter().map(|&w| node[w as usize]).collect();
            if g.has_loop(v) {
                r.push(i as u32);
            }
            r.sort_unstable();
            r.dedup();
            rows[i] = r;
        }
        WeightedQuotient { weight, clique, rows }
    }

    /// The blown-up graph, for small instances.
    pub fn expand(&self) -> SimpleGraph {
        let mut start = Vec::with_capacity(self.len());
        let mut acc = 0u32;
        for &w in &self.weight {
            start.push(acc);
            acc += w as u32;
        }
        let mut g = SimpleGraph::new(acc as usize);
        for i in 0..self.len() {
            for &j in &self.rows[i] {
                let j = j as usize;
                if j < i {
                    continue;
                }
                for u in start[i]..start[i] + self.weight[i] as u32 {
                    for v in start[j]..start[j] + self.weight[j] as u32 {
                        if i != j || u <= v {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
        g.finish();
        g
    }

    /// Certificate of the twin-reduced quotient: equal certificates iff the
    /// blown-up graphs are isomorphic. Node colours are ranks of the distinct
    /// (weight, loop) pairs, which are listed in front.
    pub fn certificate(&self) -> Vec<u64> {
        let r = self.twin_reduced();
        let mut keys: Vec<(u128, bool)> = (0..r.len()).map(|i| (r.weight[i], r.clique[i])).collect();
        keys.sort_unstable();
        keys.dedup();
        let colour: Vec<u64> = (0..r.len())
            .map(|i| keys.binary_search(&(r.weight[i], r.clique[i])).unwrap() as u64)
            .collect();
        let adj: Vec<Vec<u32>> = (0..r.len())
            .map(|i| r.rows[i].iter().copied().filter(|&j| j as usize != i).collect())
            .collect();
        let mut cert = vec![keys.len() as u64];
        for (w, c) in &keys {
            cert.extend([(w >> 64) as u64, *w as u64, u64::from(*c)]);
        }
        cert.extend(canonical_form(&colour, &adj).certificate);
        cert
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: u128) -> WeightedQuotient {
        WeightedQuotient { weight: vec![1, leaves], clique: vec![false, false], rows: vec![vec![1], vec![0]] }
    }

    #[test]
    fn star_statistics() {
        let s = star(18);
        assert_eq!(s.vertex_count(), 19);
        assert_eq!(s.edge_count(), 18);
        assert_eq!(s.bipartition_sizes(), Some((1, 18)));
        assert_eq!(s.diameter(), Some(2));
        assert!(!s.has_3cycle());
        assert!(s.has_universal_vertex());
        assert_eq!(s.degree_counts(), BTreeMap::from([(1, 18), (18, 1)]));
    }

    #[test]
    fn clique_node() {
        // K3 with loops everywhere plus a pendant-free extra node joined to it
        let q = WeightedQuotient { weight: vec![3, 2], clique: vec![true, false], rows: vec![vec![0, 1], vec![0]] };
        let g = q.expand();
        assert_eq!(g.edge_count() as u128, q.edge_count());
        assert_eq!(g.loop_count() as u128, q.loop_count());
        assert_eq!(g.diameter(), q.diameter());
        assert_eq!(g.has_triangle(), q.has_3cycle());
        let back = WeightedQuotient::from_explicit(&g);
        assert_eq!(back.certificate(), q.certificate());
    }

    #[test]
    fn twins_merge() {
        let q = WeightedQuotient {
            weight: vec![1, 2, 3],
            clique: vec![false, false, false],
            rows: vec![vec![1, 2], vec![0], vec![0]],
        };
        let r = q.twin_reduced();
        assert_eq!(r.len(), 2);
        assert_eq!(r.certificate(), star(5).certificate());
        assert_ne!(star(5).certificate(), star(6).certificate());
    }
}
