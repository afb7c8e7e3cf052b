//! The generation graphs Γ_{a,b}(G) and their pruned versions Γ*_{a,b}(G).
//!
//! Two tuples on the same side with the same generated subgroup have the
//! same neighbours, so vertices are grouped into classes keyed by that
//! subgroup and adjacency is stored between classes. A tuple is encoded as
//! the mixed-radix integer `x_1 |G|^{k-1} + ... + x_k`.

use crate::quotient::WeightedQuotient;
use crate::simple::SimpleGraph;
use fixedbitset::FixedBitSet;
use gg_core::error::cap_check;
use gg_core::{Caps, ClosureCache, FiniteGroup, GroupError, Result, SubId};
use serde::Serialize;

/// Vertices of one side sharing a generated subgroup.
#[derive(Clone, Debug)]
pub struct VertexClass {
    /// Order of the subgroup generated by the tuples in the class.
    pub subgroup_order: usize,
    /// Number of tuples in the class.
    pub size: u64,
    /// Least tuple code in the class.
    pub representative: u64,
    /// Interned id of the generated subgroup.
    pub sub: SubId,
}

#[derive(Clone, Debug)]
pub struct Side {
    pub tuple_len: usize,
    class_of: Vec<u32>,
    pub classes: Vec<VertexClass>,
}

impl Side {
    pub fn vertex_count(&self) -> u64 {
        self.class_of.len() as u64
    }

    pub fn class_of(&self, code: u64) -> u32 {
        self.class_of[code as usize]
    }
}

/// Γ_{a,b}(G) with `a <= b`. When `a == b` both sides are the same vertex set
/// and the graph may have loops.
#[derive(Clone, Debug)]
pub struct GenGraph {
    order: usize,
    a: usize,
    b: usize,
    sides: Vec<Side>,
    /// Row `i` lists the side-b classes adjacent to side-a class `i`.
    adj: Vec<FixedBitSet>,
    class_degree: Vec<Vec<u64>>,
    pruned: bool,
}

/// Statistics of one connected component of a generation graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub vertices: u64,
    /// Vertices on side a and side b (for `a == b` all vertices are on side a).
    pub side_a: u64,
    pub side_b: u64,
    pub edges: u128,
    pub loops: u64,
    pub nu: u128,
    pub has_3cycle: bool,
    pub has_degree1: bool,
    pub diameter: Option<u32>,
}

/// Largest supported a+b.
pub const MAX_TUPLE_SUM: usize = 6;

/// Node of a component quotient: `(side, class)`.
pub type ClassRef = (usize, u32);

/// Fills `class_of` for all tuples of length `k` and interns the classes.
fn classify(cache: &mut ClosureCache, n: usize, k: usize) -> Side {
    let total = n.pow(k as u32);
    let mut class_of = vec![0u32; total];
    let mut classes: Vec<VertexClass> = Vec::new();
    let mut local: rustc_hash::FxHashMap<SubId, u32> = Default::default();
    let mut digits = vec![0u32; k];
    let mut prefix = vec![cache.trivial(); k + 1];
    for i in 0..k {
        prefix[i + 1] = cache.join_elem(prefix[i], 0);
    }
    for (code, slot) in class_of.iter_mut().enumerate() {
        if code > 0 {
            // odometer step: find the last digit that does not wrap
            let mut i = k - 1;
            loop {
                digits[i] += 1;
                if (digits[i] as usize) < n {
                    break;
                }
                digits[i] = 0;
                i -= 1;
            }
            for j in i..k {
                prefix[j + 1] = cache.join_elem(prefix[j], digits[j]);
            }
        }
        let s = prefix[k];
        let next = classes.len() as u32;
        let id = *local.entry(s).or_insert(next);
        if id == next {
            classes.push(VertexClass { subgroup_order: cache.sub(s).order(), size: 0, representative: code as u64, sub: s });
        }
        classes[id as usize].size += 1;
        *slot = id;
    }
    Side { tuple_len: k, class_of, classes }
}

/// Builds Γ_{a,b}(G), isolated vertices included.
pub fn build_gamma(g: &FiniteGroup, a: usize, b: usize, caps: &Caps) -> Result<GenGraph> {
    let mut cache = ClosureCache::new(g);
    build_gamma_with(&mut cache, a, b, caps)
}

/// As [`build_gamma`], sharing a closure cache across several builds.
pub fn build_gamma_with(cache: &mut ClosureCache, a: usize, b: usize, caps: &Caps) -> Result<GenGraph> {
    if a > b {
        return Err(GroupError::ParameterOutOfRange(format!("need a <= b, got a={a}, b={b}")));
    }
    if a + b > MAX_TUPLE_SUM {
        return Err(GroupError::ParameterOutOfRange(format!("a+b={} exceeds {MAX_TUPLE_SUM}", a + b)));
    }
    let n = cache.group().order();
    let count = |k: usize| (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let total = if a == b { count(a) } else { count(a).saturating_add(count(b)) };
    cap_check("vertex count of the generation graph", total, caps.max_vertices as u128)?;
    let mut sides = vec![classify(cache, n, a)];
    if a != b {
        sides.push(classify(cache, n, b));
    }
    let sb = sides.len() - 1;
    let kb = sides[sb].classes.len();
    let mut adj = Vec::with_capacity(sides[0].classes.len());
    for ca in 0..sides[0].classes.len() {
        let mut row = FixedBitSet::with_capacity(kb);
        let sa = sides[0].classes[ca].sub;
        for cb in 0..kb {
            let j = cache.join(sa, sides[sb].classes[cb].sub);
            if cache.is_full(j) {
                row.insert(cb);
            }
        }
        adj.push(row);
    }
    let mut gg = GenGraph { order: n, a, b, sides, adj, class_degree: Vec::new(), pruned: false };
    gg.class_degree = gg.compute_class_degrees();
    Ok(gg)
}

impl GenGraph {
    fn compute_class_degrees(&self) -> Vec<Vec<u64>> {
        let sb = self.sides.len() - 1;
        let da: Vec<u64> = self
            .adj
            .iter()
            .map(|row| row.ones().map(|cb| self.sides[sb].classes[cb].size).sum())
            .collect();
        if sb == 0 {
            return vec![da];
        }
        let mut db = vec![0u64; self.sides[1].classes.len()];
        for (ca, row) in self.adj.iter().enumerate() {
            for cb in row.ones() {
                db[cb] += self.sides[0].classes[ca].size;
            }
        }
        vec![da, db]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn is_pruned(&self) -> bool {
        self.pruned
    }

    /// Side 0 holds a-tuples, side 1 holds b-tuples (the same side if a = b).
    pub fn side(&self, s: usize) -> &Side {
        &self.sides[s.min(self.sides.len() - 1)]
    }

    pub fn side_count(&self) -> usize {
        self.sides.len()
    }

    fn decode(&self, code: u64, k: usize) -> Vec<u32> {
        let n = self.order as u64;
        let mut out = vec![0u32; k];
        let mut c = code;
        for i in (0..k).rev() {
            out[i] = (c % n) as u32;
            c /= n;
        }
        out
    }

    pub fn encode(&self, tuple: &[u32]) -> u64 {
        tuple.iter().fold(0u64, |acc, &x| acc * self.order as u64 + x as u64)
    }

    /// The tuple with code `code` on side `s`.
    pub fn tuple(&self, s: usize, code: u64) -> Vec<u32> {
        self.decode(code, self.side(s).tuple_len)
    }

    pub fn class_adjacent(&self, ca: u32, cb: u32) -> bool {
        self.adj[ca as usize].contains(cb as usize)
    }

    /// Whether the a-tuple `x` and the b-tuple `y` are adjacent.
    pub fn is_edge(&self, x: u64, y: u64) -> bool {
        self.class_adjacent(self.sides[0].class_of(x), self.side(1).class_of(y))
    }

    /// Degree of the vertex with code `code` on side `s`; a loop counts once.
    pub fn degree(&self, s: usize, code: u64) -> u64 {
        let s = s.min(self.sides.len() - 1);
        self.class_degree[s][self.sides[s].class_of(code) as usize]
    }

    pub fn class_degree(&self, s: usize, c: u32) -> u64 {
        self.class_degree[s.min(self.sides.len() - 1)][c as usize]
    }

    pub fn is_isolated(&self, s: usize, code: u64) -> bool {
        self.degree(s, code) == 0
    }

    /// Number of non-loop edges.
    pub fn edge_count(&self) -> u128 {
        let s: u128 = self.class_weighted_degree_sum();
        if self.a == self.b {
            (s - self.loop_count() as u128) / 2
        } else {
            s
        }
    }

    fn class_weighted_degree_sum(&self) -> u128 {
        self.sides[0]
            .classes
            .iter()
            .zip(&self.class_degree[0])
            .map(|(c, &d)| c.size as u128 * d as u128)
            .sum()
    }

    /// Loops sit on the a-tuples that generate G (only when a = b).
    pub fn loop_count(&self) -> u64 {
        if self.a != self.b {
            return 0;
        }
        self.sides[0]
            .classes
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.class_adjacent(i as u32, i as u32))
            .map(|(_, c)| c.size)
            .sum()
    }

    pub fn vertex_count(&self) -> u64 {
        let total: u64 = self.sides.iter().map(Side::vertex_count).sum();
        if self.pruned {
            total - self.isolated_count()
        } else {
            total
        }
    }

    pub fn isolated_count(&self) -> u64 {
        let mut n = 0;
        for (s, side) in self.sides.iter().enumerate() {
            for (c, cl) in side.classes.iter().enumerate() {
                if self.class_degree[s][c] == 0 {
                    n += cl.size;
                }
            }
        }
        n
    }

    /// Γ*: the same graph with isolated vertices deleted.
    pub fn prune_isolated(&self) -> GenGraph {
        let mut g = self.clone();
        g.pruned = true;
        g
    }

    /// Whether the vertex is present (not deleted by pruning).
    pub fn contains_vertex(&self, s: usize, code: u64) -> bool {
        !self.pruned || !self.is_isolated(s, code)
    }

    /// Connected components of the non-isolated part, as lists of classes.
    /// Isolated vertices are components of their own in Γ and are reported
    /// by [`Self::components`] unless the graph is pruned.
    fn class_components(&self) -> Vec<Vec<ClassRef>> {
        let ns = self.sides.len();
        let sb = ns - 1;
        let mut seen: Vec<Vec<bool>> = self.sides.iter().map(|s| vec![false; s.classes.len()]).collect();
        let mut out = Vec::new();
        // side-b rows, for walking back from b to a
        let back: Vec<Vec<u32>> = if ns == 2 {
            let mut back = vec![Vec::new(); self.sides[1].classes.len()];
            for (ca, row) in self.adj.iter().enumerate() {
                for cb in row.ones() {
                    back[cb].push(ca as u32);
                }
            }
            back
        } else {
            Vec::new()
        };
        for s in 0..ns {
            for c in 0..self.sides[s].classes.len() {
                if seen[s][c] || self.class_degree[s][c] == 0 {
                    continue;
                }
                seen[s][c] = true;
                let mut comp: Vec<ClassRef> = vec![(s, c as u32)];
                let mut i = 0;
                while i < comp.len() {
                    let (side, cl) = comp[i];
                    let nbrs: Vec<ClassRef> = if side == 0 {
                        self.adj[cl as usize].ones().map(|x| (sb, x as u32)).collect()
                    } else {
                        back[cl as usize].iter().map(|&x| (0, x)).collect()
                    };
                    for (t, x) in nbrs {
                        if !seen[t][x as usize] {
                            seen[t][x as usize] = true;
                            comp.push((t, x));
                        }
                    }
                    i += 1;
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
        out
    }

    /// The weighted quotient of one component (no tuple data attached).
    pub fn component_quotient(&self, comp: &[ClassRef]) -> WeightedQuotient {
        let index: rustc_hash::FxHashMap<ClassRef, u32> = comp.iter().enumerate().map(|(i, &r)| (r, i as u32)).collect();
        let mut weight = Vec::with_capacity(comp.len());
        let mut clique = Vec::with_capacity(comp.len());
        let mut rows = vec![Vec::new(); comp.len()];
        for (i, &(s, c)) in comp.iter().enumerate() {
            weight.push(self.sides[s].classes[c as usize].size as u128);
            let two_sided = self.sides.len() == 2;
            clique.push(!two_sided && self.class_adjacent(c, c));
            if s == 0 {
                for cb in self.adj[c as usize].ones() {
                    let j = index[&(self.sides.len() - 1, cb as u32)];
                    rows[i].push(j);
                    if two_sided {
                        rows[j as usize].push(i as u32);
                    }
                }
            }
        }
        for r in &mut rows {
            r.sort_unstable();
            r.dedup();
        }
        WeightedQuotient { weight, clique, rows }
    }

    /// Quotients of all components of Γ* (non-isolated part).
    pub fn component_quotients(&self) -> Vec<WeightedQuotient> {
        self.class_components().iter().map(|c| self.component_quotient(c)).collect()
    }

    /// Summaries of the components. For an unpruned graph each isolated
    /// vertex is reported as a one-vertex component as well.
    pub fn components(&self) -> Vec<ComponentSummary> {
        let mut out = Vec::new();
        for comp in self.class_components() {
            let q = self.component_quotient(&comp);
            let mut side_a = 0;
            let mut side_b = 0;
            for &(s, c) in &comp {
                let size = self.sides[s].classes[c as usize].size;
                if s == 0 {
                    side_a += size;
                } else {
                    side_b += size;
                }
            }
            out.push(summarise(&q, side_a, side_b));
        }
        if !self.pruned {
            for (s, side) in self.sides.iter().enumerate() {
                for (c, cl) in side.classes.iter().enumerate() {
                    if self.class_degree[s][c] == 0 {
                        for _ in 0..cl.size {
                            out.push(ComponentSummary {
                                vertices: 1,
                                side_a: u64::from(s == 0),
                                side_b: u64::from(s == 1),
                                edges: 0,
                                loops: 0,
                                nu: 0,
                                has_3cycle: false,
                                has_degree1: false,
                                diameter: Some(0),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Number of components of Γ* (pruned view).
    pub fn pruned_component_count(&self) -> usize {
        self.class_components().len()
    }

    /// Whether Γ* is connected (an empty Γ* counts as connected).
    pub fn pruned_is_connected(&self) -> bool {
        self.pruned_component_count() <= 1
    }

    /// Diameter of Γ*; `None` if it is disconnected.
    pub fn pruned_diameter(&self) -> Option<u32> {
        let comps = self.class_components();
        match comps.len() {
            0 => Some(0),
            1 => self.component_quotient(&comps[0]).diameter(),
            _ => None,
        }
    }

    /// Explicit graph on all vertices (side a first, then side b when
    /// a != b), for small instances and cross-checks.
    pub fn to_explicit(&self) -> SimpleGraph {
        let na = self.sides[0].vertex_count();
        let offset = if self.sides.len() == 2 { na } else { 0 };
        let total = na + if self.sides.len() == 2 { self.sides[1].vertex_count() } else { 0 };
        let mut g = SimpleGraph::new(total as usize);
        let nb = self.side(1).vertex_count();
        for x in 0..na {
            for y in 0..nb {
                if self.a == self.b && y < x {
                    continue;
                }
                if self.is_edge(x, y) {
                    g.add_edge(x as u32, (offset + y) as u32);
                }
            }
        }
        g.finish();
        g
    }

    /// Vertex ids `(side, code)` present in the graph, in export order.
    pub fn vertices(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        (0..self.sides.len()).flat_map(move |s| (0..self.sides[s].vertex_count()).map(move |c| (s, c))).filter(|&(s, c)| self.contains_vertex(s, c))
    }
}

/// Statistics of a connected quotient.
pub fn summarise(q: &WeightedQuotient, side_a: u64, side_b: u64) -> ComponentSummary {
    let edges = q.edge_count();
    let loops = q.loop_count();
    let has_3cycle = q.has_3cycle();
    ComponentSummary {
        vertices: q.vertex_count() as u64,
        side_a,
        side_b,
        edges,
        loops: loops as u64,
        nu: if has_3cycle { 2 * edges + loops } else { edges },
        has_3cycle,
        has_degree1: (0..q.len()).any(|i| q.degree(i) == 1),
        diameter: q.diameter(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gg_core::group_builtin;

    fn g(s: &str) -> FiniteGroup {
        group_builtin(s, &Caps::default()).unwrap()
    }

    #[test]
    fn c2_one_one() {
        let gr = build_gamma(&g("cyclic:2"), 1, 1, &Caps::default()).unwrap();
        assert_eq!(gr.loop_count(), 1);
        assert_eq!(gr.edge_count(), 1);
        assert_eq!(gr.vertex_count(), 2);
    }

    #[test]
    fn klein_is_k3() {
        let gr = build_gamma(&g("klein"), 1, 1, &Caps::default()).unwrap().prune_isolated();
        assert_eq!(gr.vertex_count(), 3);
        let comps = gr.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].edges, 3);
        assert_eq!(comps[0].diameter, Some(1));
        assert!(comps[0].has_3cycle);
    }

    #[test]
    fn s3_star() {
        let gr = build_gamma(&g("sym:3"), 0, 2, &Caps::default()).unwrap().prune_isolated();
        let comps = gr.components();
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].side_a, comps[0].side_b), (1, 18));
        assert!(comps[0].has_degree1);
    }

    #[test]
    fn quotient_matches_explicit() {
        for (s, a, b) in [("sym:3", 1, 1), ("sym:3", 1, 2), ("cyclic:6", 1, 1), ("klein", 1, 2), ("cyclic:4", 2, 2), ("quaternion", 1, 1)] {
            let gr = build_gamma(&g(s), a, b, &Caps::default()).unwrap();
            let ex = gr.to_explicit();
            assert_eq!(ex.edge_count() as u128, gr.edge_count(), "{s}");
            assert_eq!(ex.loop_count() as u64, gr.loop_count(), "{s}");
            let star = ex.induced(&ex.non_isolated());
            let comps = star.components();
            let summaries = gr.prune_isolated().components();
            assert_eq!(comps.len(), summaries.len(), "{s}");
            let mut ex_d: Vec<_> = comps.iter().map(|c| star.induced(c).diameter()).collect();
            let mut q_d: Vec<_> = summaries.iter().map(|c| c.diameter).collect();
            ex_d.sort();
            q_d.sort();
            assert_eq!(ex_d, q_d, "{s}");
        }
    }

    #[test]
    fn rejects_a_above_b() {
        assert!(build_gamma(&g("cyclic:2"), 2, 1, &Caps::default()).is_err());
        let caps = Caps { max_vertices: 10, ..Caps::default() };
        assert!(build_gamma(&g("sym:3"), 1, 2, &caps).is_err());
    }
}
