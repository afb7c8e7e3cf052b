//! The swap graph Σ_d(G): generating d-tuples, adjacent when they differ in
//! exactly one entry.

use gg_core::error::cap_check;
use gg_core::{Caps, ClosureCache, FiniteGroup, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::VecDeque;

pub struct SwapGraph {
    order: usize,
    d: usize,
    /// Tuple codes of the vertices, increasing.
    codes: Vec<u64>,
    /// `index[code]` is the vertex number, or `u32::MAX` for non-generating tuples.
    index: Vec<u32>,
}

/// Diameter of a large graph: exact when `lower == upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterBounds {
    pub lower: u32,
    pub upper: u32,
}

/// Above this many vertices diameters are bounded rather than computed.
pub const EXACT_DIAMETER_LIMIT: usize = 100_000;

pub fn build_swap(g: &FiniteGroup, d: usize, caps: &Caps) -> Result<SwapGraph> {
    let n = g.order();
    let total = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    cap_check("tuple count |G|^d for the swap graph", total, caps.max_vertices as u128)?;
    let total = total as usize;
    let mut cache = ClosureCache::new(g);
    let mut index = vec![u32::MAX; total];
    let mut codes = Vec::new();
    let mut digits = vec![0u32; d];
    let mut prefix = vec![cache.trivial(); d + 1];
    for i in 0..d {
        prefix[i + 1] = cache.join_elem(prefix[i], 0);
    }
    for code in 0..total {
        if code > 0 {
            let mut i = d - 1;
            loop {
                digits[i] += 1;
                if (digits[i] as usize) < n {
                    break;
                }
                digits[i] = 0;
                i -= 1;
            }
            for j in i..d {
                prefix[j + 1] = cache.join_elem(prefix[j], digits[j]);
            }
        }
        if cache.is_full(prefix[d]) {
            index[code] = codes.len() as u32;
            codes.push(code as u64);
        }
    }
    Ok(SwapGraph { order: n, d, codes, index })
}

impl SwapGraph {
    pub fn vertex_count(&self) -> usize {
        self.codes.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn tuple(&self, v: u32) -> Vec<u32> {
        let n = self.order as u64;
        let mut c = self.codes[v as usize];
        let mut out = vec![0u32; self.d];
        for i in (0..self.d).rev() {
            out[i] = (c % n) as u32;
            c /= n;
        }
        out
    }

    /// Calls `f` on every neighbour of vertex `v`.
    pub fn for_each_neighbor(&self, v: u32, mut f: impl FnMut(u32)) {
        let n = self.order as u64;
        let code = self.codes[v as usize];
        let mut place = 1u64;
        for _ in 0..self.d {
            let digit = (code / place) % n;
            let base = code - digit * place;
            for x in 0..n {
                if x != digit {
                    let w = self.index[(base + x * place) as usize];
                    if w != u32::MAX {
                        f(w);
                    }
                }
            }
            place *= n;
        }
    }

    pub fn edge_count(&self) -> u64 {
        let mut s = 0u64;
        for v in 0..self.codes.len() as u32 {
            self.for_each_neighbor(v, |_| s += 1);
        }
        s / 2
    }

    pub fn distances(&self, s: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.codes.len()];
        dist[s as usize] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let du = dist[u as usize];
            self.for_each_neighbor(u, |w| {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    q.push_back(w);
                }
            });
        }
        dist
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.codes.len()];
        let mut count = 0;
        for s in 0..self.codes.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s as u32];
            while let Some(u) = stack.pop() {
                self.for_each_neighbor(u, |w| {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                });
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Exact diameter by BFS from every vertex; `None` if disconnected.
    pub fn diameter(&self) -> Option<u32> {
        if !self.is_connected() {
            return None;
        }
        Some((0..self.codes.len() as u32).into_par_iter().map(|s| *self.distances(s).iter().max().unwrap_or(&0)).max().unwrap_or(0))
    }

    /// Exact below [`EXACT_DIAMETER_LIMIT`] vertices; otherwise the two-sweep
    /// lower bound and twice the eccentricity of the sweep's midpoint start.
    pub fn diameter_bounds(&self) -> Option<DiameterBounds> {
        if self.codes.is_empty() {
            return Some(DiameterBounds { lower: 0, upper: 0 });
        }
        if self.codes.len() <= EXACT_DIAMETER_LIMIT {
            return self.diameter().map(|d| DiameterBounds { lower: d, upper: d });
        }
        let d0 = self.distances(0);
        if d0.contains(&u32::MAX) {
            return None;
        }
        let ecc0 = *d0.iter().max().unwrap();
        let far = d0.iter().position(|&x| x == ecc0).unwrap() as u32;
        let lower = *self.distances(far).iter().max().unwrap();
        Some(DiameterBounds { lower, upper: (2 * ecc0).max(lower) })
    }
}
