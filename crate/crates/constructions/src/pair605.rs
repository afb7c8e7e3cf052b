//! Two non-isomorphic groups F_11^2 ⋊ C_5 of order 605 and a bijection τ
//! between them that preserves generation of tuples.
//!
//! In G_j the generator x of C_5 acts on V = ⟨a, b⟩ by a ↦ 3a and
//! b ↦ 4b (j = 1) or b ↦ 5b (j = 2). The element (αa + βb)x^γ has index
//! (11α + β)·5 + γ.

use gg_core::{subgroup_lattice, Caps, FiniteGroup};
use rayon::prelude::*;

pub const P: usize = 11;
pub const Q: usize = 5;

#[derive(Clone, Debug)]
pub struct Pair605 {
    pub g1: FiniteGroup,
    pub g2: FiniteGroup,
    /// τ as an element map G1 → G2.
    pub tau: Vec<u32>,
}

pub fn index(alpha: usize, beta: usize, gamma: usize) -> u32 {
    ((alpha * P + beta) * Q + gamma) as u32
}

fn parts(k: u32) -> (usize, usize, usize) {
    let k = k as usize;
    (k / Q / P, (k / Q) % P, k % Q)
}

/// V ⋊ ⟨x⟩ with x a x^-1 = ea·a and x b x^-1 = eb·b.
fn metacyclic(ea: usize, eb: usize) -> FiniteGroup {
    let pow = |e: usize, k: usize| (0..k).fold(1, |acc, _| acc * e % P);
    let names = (0..P * P * Q)
        .map(|k| {
            let (a, b, c) = parts(k as u32);
            format!("({a}a+{b}b)x^{c}")
        })
        .collect();
    FiniteGroup::from_fn(P * P * Q, Some(names), |x, y| {
        let (a1, b1, c1) = parts(x as u32);
        let (a2, b2, c2) = parts(y as u32);
        let a = (a1 + pow(ea, c1) * a2) % P;
        let b = (b1 + pow(eb, c1) * b2) % P;
        index(a, b, (c1 + c2) % Q) as usize
    })
    .expect("semidirect product")
}

/// Builds G1, G2 and τ. For γ ∈ {0, 1}, τ keeps the coordinates. Otherwise
/// g = ((α*a + β*b)x)^γ for a unique (α*, β*), found by trying all 121
/// candidates, and τ(g) = ((α*a + β*b)x)^γ computed in G2.
pub fn build_605_pair() -> Pair605 {
    let g1 = metacyclic(3, 4);
    let g2 = metacyclic(3, 5);
    let tau = (0..(P * P * Q) as u32)
        .map(|g| {
            let (alpha, beta, gamma) = parts(g);
            if gamma <= 1 {
                return index(alpha, beta, gamma);
            }
            let (sa, sb) = (0..P)
                .flat_map(|s| (0..P).map(move |t| (s, t)))
                .find(|&(s, t)| g1.pow(index(s, t, 1), gamma as u64) == g)
                .expect("every element with γ ≠ 0 is a γ-th power of some (α*a+β*b)x");
            g2.pow(index(sa, sb, 1), gamma as u64)
        })
        .collect();
    Pair605 { g1, g2, tau }
}

impl Pair605 {
    pub fn tau_is_bijective(&self) -> bool {
        let mut seen = vec![false; self.tau.len()];
        self.tau.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    /// A pair on which τ changes whether it generates, by closure on every
    /// ordered pair; `None` when τ preserves Γ_{1,1}.
    pub fn pair_violation(&self) -> Option<(u32, u32)> {
        let n = self.tau.len() as u32;
        (0..n).into_par_iter().find_map_any(|x| {
            (0..n).find_map(|y| {
                let a = self.g1.generates(&[x, y]);
                let b = self.g2.generates(&[self.tau[x as usize], self.tau[y as usize]]);
                (a != b).then_some((x, y))
            })
        })
    }

    /// A k-tuple on which τ changes generation, using that a tuple generates
    /// iff no maximal subgroup contains all of it; `None` if there is none.
    pub fn tuple_violation(&self, k: usize, caps: &Caps) -> gg_core::Result<Option<Vec<u32>>> {
        let masks = |g: &FiniteGroup| -> gg_core::Result<Vec<u64>> {
            let lat = subgroup_lattice(g, caps)?;
            let maxes = lat.maximal_indices();
            assert!(maxes.len() <= 64);
            Ok((0..g.order() as u32)
                .map(|x| {
                    let c = lat.cyclic_index(g, x);
                    maxes.iter().enumerate().filter(|&(_, &m)| lat.leq(c, m)).fold(0u64, |acc, (i, _)| acc | 1 << i)
                })
                .collect())
        };
        let (m1, m2) = (masks(&self.g1)?, masks(&self.g2)?);
        let n = self.tau.len();
        gg_core::error::cap_check("tuple space", (n as u128).pow(k as u32), caps.max_vertices as u128 * 100)?;
        let total = n.pow(k as u32 - 1);
        Ok((0..n).into_par_iter().find_map_any(|first| {
            (0..total).find_map(|rest| {
                let mut t = vec![first as u32];
                let mut r = rest;
                for _ in 1..k {
                    t.push((r % n) as u32);
                    r /= n;
                }
                let c1 = t.iter().fold(!0u64, |acc, &x| acc & m1[x as usize]);
                let c2 = t.iter().fold(!0u64, |acc, &x| acc & m2[self.tau[x as usize] as usize]);
                ((c1 == 0) != (c2 == 0)).then_some(t)
            })
        }))
    }
}
