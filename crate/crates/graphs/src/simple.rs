//! Plain adjacency-list graphs with loops, used for explicit oracles, swap
//! graphs and small exports.

use std::collections::VecDeque;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
    looped: Vec<bool>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); n], looped: vec![false; n] }
    }

    /// Builds from an edge list; `(u, u)` records a loop. Duplicates are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g.finish();
        g
    }

    pub fn add_edge(&mut self, u: u32, v: u32) {
        if u == v {
            self.looped[u as usize] = true;
        } else {
            self.adj[u as usize].push(v);
            self.adj[v as usize].push(u);
        }
    }

    /// Sorts and deduplicates adjacency lists; call after `add_edge`s.
    pub fn finish(&mut self) {
        for row in &mut self.adj {
            row.sort_unstable();
            row.dedup();
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Neighbours other than the vertex itself.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_loop(&self, v: u32) -> bool {
        self.looped[v as usize]
    }

    pub fn is_adjacent(&self, u: u32, v: u32) -> bool {
        if u == v {
            self.looped[u as usize]
        } else {
            self.adj[u as usize].binary_search(&v).is_ok()
        }
    }

    /// Degree with a loop counted once.
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len() + usize::from(self.looped[v as usize])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn loop_count(&self) -> usize {
        self.looped.iter().filter(|&&b| b).count()
    }

    pub fn is_isolated(&self, v: u32) -> bool {
        self.degree(v) == 0
    }

    /// BFS distances from `s` (`u32::MAX` for unreachable).
    pub fn distances(&self, s: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[s as usize] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let du = dist[u as usize];
            for &v in &self.adj[u as usize] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    q.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, in order of least vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() as u32 {
            if seen[s as usize] {
                continue;
            }
            seen[s as usize] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for &v in &self.adj[u as usize] {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced on `verts` (renumbered in the given order).
    pub fn induced(&self, verts: &[u32]) -> SimpleGraph {
        let mut pos = vec![u32::MAX; self.len()];
        for (i, &v) in verts.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let mut g = SimpleGraph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            g.looped[i] = self.looped[v as usize];
            g.adj[i] = self.adj[v as usize].iter().filter_map(|&w| (pos[w as usize] != u32::MAX).then_some(pos[w as usize])).collect();
            g.adj[i].sort_unstable();
        }
        g
    }

    /// Non-isolated vertices, in increasing order.
    pub fn non_isolated(&self) -> Vec<u32> {
        (0..self.len() as u32).filter(|&v| !self.is_isolated(v)).collect()
    }

    /// Exact diameter by BFS from every vertex; `None` if disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for s in 0..self.len() as u32 {
            let d = self.distances(s);
            let m = *d.iter().max().unwrap_or(&0);
            if m == u32::MAX {
                return None;
            }
            best = best.max(m);
        }
        Some(best)
    }

    pub fn has_triangle(&self) -> bool {
        for u in 0..self.len() as u32 {
            for &v in self.neighbors(u) {
                if v <= u {
                    continue;
                }
                let (a, b) = (self.neighbors(u), self.neighbors(v));
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    if a[i] == b[j] {
                        return true;
                    }
                    if a[i] < b[j] {
                        i += 1;
                    } else {
                        j += 1;
                    }
                }
            }
        }
        false
    }

    /// A 2-colouring if the graph is bipartite and loop free.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        if self.looped.iter().any(|&b| b) {
            return None;
        }
        let mut col = vec![u8::MAX; self.len()];
        for s in 0..self.len() {
            if col[s] != u8::MAX {
                continue;
            }
            col[s] = 0;
            let mut q = VecDeque::from([s as u32]);
            while let Some(u) = q.pop_front() {
                for &v in &self.adj[u as usize] {
                    if col[v as usize] == u8::MAX {
                        col[v as usize] = 1 - col[u as usize];
                        q.push_back(v);
                    } else if col[v as usize] == col[u as usize] {
                        return None;
                    }
                }
            }
        }
        Some(col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_triangle() {
        let p = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 3)]);
        assert_eq!(p.diameter(), Some(3));
        assert_eq!(p.edge_count(), 3);
        assert_eq!(p.loop_count(), 1);
        assert_eq!(p.degree(3), 2);
        assert!(!p.has_triangle());
        assert!(p.two_colouring().is_none());
        let t = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(t.has_triangle());
        assert_eq!(t.diameter(), Some(1));
        let two = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(two.diameter(), None);
        assert_eq!(two.induced(&[2, 3]).edge_count(), 1);
    }
}
