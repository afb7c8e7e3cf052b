//! Γ*_{a,b}(G) built from the subgroup lattice alone.
//!
//! A node is a pair (side, H) weighted by the number of tuples generating
//! exactly H; nodes H and K are joined iff <H, K> = G. No tuple is ever
//! enumerated, so levels far beyond |G|^{a+b} ≈ 10^7 are reachable.

use crate::quotient::WeightedQuotient;
use gg_core::{GroupError, Result, SubgroupLattice};
use std::collections::VecDeque;

/// Number of k-tuples generating exactly each subgroup, by subtracting the
/// counts of proper subgroups from |H|^k.
pub fn exact_generation_counts(lat: &SubgroupLattice, k: usize) -> Result<Vec<u128>> {
    let overflow = || GroupError::OrderCapExceeded { what: "tuple count |G|^k", value: u128::MAX, cap: u128::MAX };
    let mut f = vec![0u128; lat.len()];
    for h in 0..lat.len() {
        let mut v = (lat.subgroup(h).order() as u128).checked_pow(k as u32).ok_or_else(overflow)?;
        for kk in 0..h {
            if lat.leq(kk, h) {
                v -= f[kk];
            }
        }
        f[h] = v;
    }
    Ok(f)
}

/// Whether `<H_i, H_j> = G`.
fn joins_to_full(lat: &SubgroupLattice, i: usize, j: usize) -> bool {
    let mut common = lat.supersets(i).clone();
    common.intersect_with(lat.supersets(j));
    common.count_ones(..) == 1
}

/// Connected components of Γ*_{a,b}(G), `a <= b`, as weighted quotients.
pub fn gamma_components(lat: &SubgroupLattice, a: usize, b: usize) -> Result<Vec<WeightedQuotient>> {
    if a > b {
        return Err(GroupError::ParameterOutOfRange(format!("need a <= b, got a={a}, b={b}")));
    }
    let fa = exact_generation_counts(lat, a)?;
    let fb = if a == b { fa.clone() } else { exact_generation_counts(lat, b)? };
    let subs_a: Vec<usize> = (0..lat.len()).filter(|&h| fa[h] > 0).collect();
    let subs_b: Vec<usize> = (0..lat.len()).filter(|&h| fb[h] > 0).collect();
    // node list: side a first, then side b when the sides differ
    let mut nodes: Vec<(usize, u128)> = subs_a.iter().map(|&h| (h, fa[h])).collect();
    let offset = nodes.len();
    if a != b {
        nodes.extend(subs_b.iter().map(|&h| (h, fb[h])));
    }
    let mut rows = vec![Vec::new(); nodes.len()];
    for (i, &h) in subs_a.iter().enumerate() {
        if a == b {
            for (j, &k) in subs_a.iter().enumerate() {
                if joins_to_full(lat, h, k) {
                    rows[i].push(j as u32);
                }
            }
        } else {
            for (j, &k) in subs_b.iter().enumerate() {
                if joins_to_full(lat, h, k) {
                    rows[i].push((offset + j) as u32);
                    rows[offset + j].push(i as u32);
                }
            }
        }
    }
    for r in &mut rows {
        r.sort_unstable();
    }
    let clique: Vec<bool> = (0..nodes.len()).map(|i| a == b && rows[i].binary_search(&(i as u32)).is_ok()).collect();
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for s in 0..nodes.len() {
        if seen[s] || rows[s].is_empty() {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &rows[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    comp.push(v as usize);
                    q.push_back(v as usize);
                }
            }
        }
        comp.sort_unstable();
        let local = |v: u32| comp.binary_search(&(v as usize)).unwrap() as u32;
        out.push(WeightedQuotient {
            weight: comp.iter().map(|&u| nodes[u].1).collect(),
            clique: comp.iter().map(|&u| clique[u]).collect(),
            rows: comp.iter().map(|&u| rows[u].iter().map(|&v| local(v)).collect()).collect(),
        });
    }
    Ok(out)
}
