//! G = (GL(2,2) × GL(2,2)) ⋉ W with W = (F_2^2)^(2u), u = 2(d − 1): a group
//! in which two (d−1)-tuples each have neighbours in Γ_{d-1,1}(G) but no
//! common one.
//!
//! Elements are stored as integers, not as a Cayley table (the table for
//! d = 2 would have 9216² entries). The element h·w is coded as
//! `((h1 * 6 + h2) << 4u) | w`, where block j of W occupies bits 2j, 2j + 1.
//! Blocks 0..u are acted on by h1, blocks u..2u by h2, with vectors as rows
//! multiplied on the right: (h w)(h' w') = (h h') (w^h' + w').

use crate::error::Result;
use gg_core::error::cap_check;
use gg_core::Caps;
use rayon::prelude::*;
use serde::Serialize;

/// Matrices [[a, b], [c, d]] over F_2 with ad + bc = 1, identity first.
const GL22: [[u8; 4]; 6] = [[1, 0, 0, 1], [1, 0, 1, 1], [1, 1, 1, 0], [1, 1, 0, 1], [0, 1, 1, 0], [0, 1, 1, 1]];
pub const X: usize = 1;
pub const Y: usize = 2;
pub const Z: usize = 3;
pub const E1: u64 = 0b01;
pub const E2: u64 = 0b10;

/// Largest order for which the exhaustive common-neighbour scan runs.
pub const SCAN_MAX_ORDER: u64 = 100_000;

fn mat_mul(m: [u8; 4], k: [u8; 4]) -> [u8; 4] {
    [
        (m[0] & k[0]) ^ (m[1] & k[2]),
        (m[0] & k[1]) ^ (m[1] & k[3]),
        (m[2] & k[0]) ^ (m[3] & k[2]),
        (m[2] & k[1]) ^ (m[3] & k[3]),
    ]
}

fn gl_index(m: [u8; 4]) -> usize {
    GL22.iter().position(|&k| k == m).expect("invertible matrix")
}

/// v · m for the row vector v = (v_1, v_2) = bit0, bit1.
fn vec_mul(v: u64, m: [u8; 4]) -> u64 {
    let (v1, v2) = ((v & 1) as u8, ((v >> 1) & 1) as u8);
    let w1 = (v1 & m[0]) ^ (v2 & m[2]);
    let w2 = (v1 & m[1]) ^ (v2 & m[3]);
    (w1 | (w2 << 1)) as u64
}

#[derive(Clone, Debug)]
pub struct CounterexampleGroup {
    d: usize,
    u: usize,
    gl_mul: [[usize; 6]; 6],
    /// act[h][v] = v·h on one block.
    act: [[u64; 4]; 6],
}

impl CounterexampleGroup {
    pub fn new(d: usize) -> Self {
        let mut gl_mul = [[0; 6]; 6];
        let mut act = [[0; 4]; 6];
        for i in 0..6 {
            for j in 0..6 {
                gl_mul[i][j] = gl_index(mat_mul(GL22[i], GL22[j]));
            }
            for v in 0..4 {
                act[i][v as usize] = vec_mul(v, GL22[i]);
            }
        }
        CounterexampleGroup { d, u: 2 * (d - 1), gl_mul, act }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn u(&self) -> usize {
        self.u
    }

    fn w_bits(&self) -> usize {
        4 * self.u
    }

    pub fn order(&self) -> u64 {
        36 << self.w_bits()
    }

    pub fn identity(&self) -> u64 {
        0
    }

    /// The element (h1, h2)·w, with `w1`, `w2` the u blocks of each half.
    pub fn element(&self, h1: usize, h2: usize, w1: &[u64], w2: &[u64]) -> u64 {
        let mut w = 0u64;
        for (j, &v) in w1.iter().chain(w2).enumerate() {
            w |= v << (2 * j);
        }
        (((h1 * 6 + h2) as u64) << self.w_bits()) | w
    }

    fn split(&self, x: u64) -> (usize, usize, u64) {
        let h = (x >> self.w_bits()) as usize;
        (h / 6, h % 6, x & ((1u64 << self.w_bits()) - 1))
    }

    fn act_w(&self, w: u64, h1: usize, h2: usize) -> u64 {
        let mut out = 0u64;
        for j in 0..2 * self.u {
            let h = if j < self.u { h1 } else { h2 };
            out |= self.act[h][((w >> (2 * j)) & 3) as usize] << (2 * j);
        }
        out
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let (a1, a2, v) = self.split(x);
        let (b1, b2, w) = self.split(y);
        let h = (self.gl_mul[a1][b1] * 6 + self.gl_mul[a2][b2]) as u64;
        (h << self.w_bits()) | (self.act_w(v, b1, b2) ^ w)
    }

    /// Size of ⟨gens⟩, by breadth-first closure under right multiplication.
    pub fn closure_size(&self, gens: &[u64]) -> u64 {
        let mut seen = fixedbitset::FixedBitSet::with_capacity(self.order() as usize);
        let mut queue = vec![self.identity()];
        seen.insert(0);
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen.put(y as usize) {
                    queue.push(y);
                }
            }
            i += 1;
        }
        queue.len() as u64
    }

    pub fn generates(&self, gens: &[u64]) -> bool {
        self.closure_size(gens) == self.order()
    }
}

#[derive(Clone, Debug)]
pub struct Section3 {
    pub group: CounterexampleGroup,
    /// (a_11, a_2, …, a_{d−1}) and (a_12, a_2, …, a_{d−1}).
    pub first: Vec<u64>,
    pub second: Vec<u64>,
    pub b1: u64,
    pub b2: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommonNeighbourScan {
    pub order: u64,
    pub first_completions: u64,
    pub second_completions: u64,
    /// Elements completing both tuples; empty when the claim holds.
    pub common: Vec<u64>,
}

/// Builds the group and the tuples; the order is 36·4^(2u).
pub fn build_section3_counterexample(d: usize, caps: &Caps) -> Result<Section3> {
    if d < 2 {
        return Err(gg_core::GroupError::ParameterOutOfRange("d must be at least 2".into()).into());
    }
    cap_check("order of the counterexample group", 36u128 << (8 * (d - 1)).min(120), caps.max_vertices as u128)?;
    let grp = CounterexampleGroup::new(d);
    let u = grp.u();
    let zeros = vec![0u64; u];
    let block = |entries: &[(usize, u64)]| {
        let mut v = zeros.clone();
        for &(j, e) in entries {
            v[j] = e;
        }
        v
    };
    let w11 = block(&[(1, E2)]);
    let w12 = block(&[(0, E1), (1, E2)]);
    let a11 = grp.element(X, X, &w11, &w11);
    let a12 = grp.element(X, X, &w12, &w12);
    let rest: Vec<u64> = (2..d)
        .map(|i| {
            let w = block(&[(2 * (i - 1), E1), (2 * (i - 1) + 1, E2)]);
            grp.element(0, 0, &w, &w)
        })
        .collect();
    let wb = block(&[(0, E1)]);
    let b1 = grp.element(Y, Z, &wb, &wb);
    let b2 = grp.element(Y, Z, &zeros, &wb);
    let first = std::iter::once(a11).chain(rest.iter().copied()).collect();
    let second = std::iter::once(a12).chain(rest.iter().copied()).collect();
    Ok(Section3 { group: grp, first, second, b1, b2 })
}

impl Section3 {
    pub fn with_last(&self, tuple: &[u64], b: u64) -> Vec<u64> {
        let mut t = tuple.to_vec();
        t.push(b);
        t
    }

    /// ⟨first, b1⟩ = G and ⟨second, b2⟩ = G.
    pub fn witnesses_generate(&self) -> (bool, bool) {
        (
            self.group.generates(&self.with_last(&self.first, self.b1)),
            self.group.generates(&self.with_last(&self.second, self.b2)),
        )
    }

    /// Tests every b ∈ G against both tuples, in parallel.
    pub fn scan_common_neighbours(&self) -> Result<CommonNeighbourScan> {
        let order = self.group.order();
        cap_check("order for the exhaustive scan", order as u128, SCAN_MAX_ORDER as u128)?;
        let hits: Vec<(bool, bool)> = (0..order)
            .into_par_iter()
            .map(|b| {
                (
                    self.group.generates(&self.with_last(&self.first, b)),
                    self.group.generates(&self.with_last(&self.second, b)),
                )
            })
            .collect();
        Ok(CommonNeighbourScan {
            order,
            first_completions: hits.iter().filter(|h| h.0).count() as u64,
            second_completions: hits.iter().filter(|h| h.1).count() as u64,
            common: (0..order).filter(|&b| hits[b as usize] == (true, true)).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl22_is_sym3() {
        let g = CounterexampleGroup::new(2);
        for i in 0..6 {
            assert_eq!(g.gl_mul[0][i], i);
            for j in 0..6 {
                for k in 0..6 {
                    assert_eq!(g.gl_mul[g.gl_mul[i][j]][k], g.gl_mul[i][g.gl_mul[j][k]]);
                }
            }
        }
        assert_eq!(g.gl_mul[X][X], 0);
        assert_eq!(g.gl_mul[g.gl_mul[Y][Y]][Y], 0);
    }

    #[test]
    fn multiplication_is_associative_on_samples() {
        let g = CounterexampleGroup::new(2);
        let n = g.order();
        for i in 0..400u64 {
            let (x, y, z) = ((i * 7919) % n, (i * 104729 + 3) % n, (i * 1299709 + 11) % n);
            assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        }
        assert_eq!(n, 9216);
    }
}
