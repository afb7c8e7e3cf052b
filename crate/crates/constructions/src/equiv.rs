//! The relations ≡_m and ≡_m^(r), the invariant ψ(G), efficient generation
//! and non-zero spread.
//!
//! x ≡_m^(r) y when (x) and (y) have the same neighbours in Γ_{1,r-1}(G).
//! Two routes compute this: the lattice route records, for every subgroup K
//! generated by r − 1 elements, whether ⟨x, K⟩ = G; the graph route reads
//! neighbourhoods off the built graph. The library uses the lattice route
//! and the tests compare it with the graph route.

use crate::error::{ConstructionError, Result};
use gg_core::generation::min_generators;
use gg_core::{subgroup_lattice, Caps, FiniteGroup, SubgroupLattice};
use gg_graphs::build_gamma;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    /// "m", "m(r)" or "gamma".
    pub relation: &'static str,
    pub r: Option<usize>,
    /// Classes as sorted element lists, ordered by least element.
    pub classes: Vec<Vec<u32>>,
}

impl EquivalenceReport {
    fn from_keys<K: Ord>(relation: &'static str, r: Option<usize>, keys: Vec<K>) -> Self {
        let mut groups: BTreeMap<K, Vec<u32>> = BTreeMap::new();
        for (x, k) in keys.into_iter().enumerate() {
            groups.entry(k).or_default().push(x as u32);
        }
        let mut classes: Vec<Vec<u32>> = groups.into_values().collect();
        classes.sort();
        EquivalenceReport { relation, r, classes }
    }

    /// Whether both reports partition the elements the same way.
    pub fn same_partition(&self, other: &Self) -> bool {
        self.classes == other.classes
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        let n: usize = other.classes.iter().map(|c| c.len()).sum();
        let mut owner = vec![0usize; n];
        for (i, c) in other.classes.iter().enumerate() {
            for &x in c {
                owner[x as usize] = i;
            }
        }
        self.classes.iter().all(|c| c.iter().all(|&x| owner[x as usize] == owner[c[0] as usize]))
    }
}

/// Lattice indices of the subgroups generated by at most `k` elements.
fn generated_by_at_most(g: &FiniteGroup, lat: &SubgroupLattice, k: usize) -> Vec<usize> {
    let cyclic: BTreeSet<usize> = (0..g.order() as u32).map(|x| lat.cyclic_index(g, x)).collect();
    let mut level: BTreeSet<usize> = BTreeSet::from([0]);
    for _ in 0..k {
        let next: BTreeSet<usize> =
            level.iter().flat_map(|&s| cyclic.iter().map(move |&c| (s, c))).map(|(s, c)| lat.join(s, c)).collect();
        if next == level {
            break;
        }
        level = next;
    }
    level.into_iter().collect()
}

/// For each element, which of the given subgroups K complete it: ⟨x, K⟩ = G.
fn completion_signatures(g: &FiniteGroup, lat: &SubgroupLattice, ks: &[usize]) -> Vec<Vec<bool>> {
    let full = lat.full_index();
    let mut by_cyclic: BTreeMap<usize, Vec<bool>> = BTreeMap::new();
    (0..g.order() as u32)
        .map(|x| {
            let c = lat.cyclic_index(g, x);
            by_cyclic.entry(c).or_insert_with(|| ks.iter().map(|&k| lat.join(c, k) == full).collect()).clone()
        })
        .collect()
}

/// ≡_m: same maximal subgroups.
pub fn equiv_m(g: &FiniteGroup, caps: &Caps) -> Result<EquivalenceReport> {
    let lat = subgroup_lattice(g, caps)?;
    Ok(equiv_m_lat(g, &lat))
}

fn equiv_m_lat(g: &FiniteGroup, lat: &SubgroupLattice) -> EquivalenceReport {
    let maxes = lat.maximal_indices();
    let keys: Vec<Vec<bool>> = (0..g.order() as u32)
        .map(|x| {
            let c = lat.cyclic_index(g, x);
            maxes.iter().map(|&m| lat.leq(c, m)).collect()
        })
        .collect();
    EquivalenceReport::from_keys("m", None, keys)
}

/// ≡_m^(r) for r ≥ 1.
pub fn equiv_m_r(g: &FiniteGroup, r: usize, caps: &Caps) -> Result<EquivalenceReport> {
    if r == 0 {
        return Err(gg_core::GroupError::ParameterOutOfRange("r must be positive".into()).into());
    }
    let lat = subgroup_lattice(g, caps)?;
    Ok(equiv_m_r_lat(g, &lat, r))
}

fn equiv_m_r_lat(g: &FiniteGroup, lat: &SubgroupLattice, r: usize) -> EquivalenceReport {
    let ks = generated_by_at_most(g, lat, r - 1);
    EquivalenceReport::from_keys("m(r)", Some(r), completion_signatures(g, lat, &ks))
}

/// ≡_Γ: same neighbours in Γ_{1,d(G)-1}(G), read off the built graph.
pub fn equiv_gamma(g: &FiniteGroup, caps: &Caps) -> Result<EquivalenceReport> {
    let d = min_generators(g);
    let keys = graph_neighbourhoods(g, d.max(1) - 1, caps)?;
    Ok(EquivalenceReport::from_keys("gamma", Some(d), keys))
}

/// Neighbourhood of every 1-tuple in Γ_{1,s}(G), as a set of vertex classes
/// of the other side (each class is a set of tuples with one generated
/// subgroup, so equal class sets mean equal neighbourhoods).
fn graph_neighbourhoods(g: &FiniteGroup, s: usize, caps: &Caps) -> Result<Vec<Vec<u64>>> {
    let gg = build_gamma(g, s.min(1), s.max(1), caps)?;
    let one = if s == 0 { 1 } else { 0 };
    let other = 1 - one;
    let n_other = (g.order() as u64).pow(s as u32);
    Ok((0..g.order() as u32)
        .map(|x| {
            let cx = gg.side(one).class_of(x as u64);
            let mut nb: Vec<u64> = (0..n_other)
                .filter(|&y| {
                    let cy = gg.side(other).class_of(y);
                    if one == 0 { gg.class_adjacent(cx, cy) } else { gg.class_adjacent(cy, cx) }
                })
                .collect();
            nb.sort_unstable();
            nb
        })
        .collect())
}

/// ψ(G): the least r with ≡_m^(r) = ≡_m, searched up to d(G) + 5.
/// The trivial group has ψ = d = 0.
pub fn psi(g: &FiniteGroup, caps: &Caps) -> Result<usize> {
    let d = min_generators(g);
    if d == 0 {
        return Ok(0);
    }
    let lat = subgroup_lattice(g, caps)?;
    let m = equiv_m_lat(g, &lat);
    (1..=d + 5)
        .find(|&r| equiv_m_r_lat(g, &lat, r).same_partition(&m))
        .ok_or(ConstructionError::PsiSearchExceeded { d, searched: d + 5 })
}

/// Which 1-tuples are isolated in Γ_{1,d(G)-1}(G), by the lattice route.
pub fn isolated_one_tuples(g: &FiniteGroup, caps: &Caps) -> Result<Vec<bool>> {
    let d = min_generators(g);
    if d == 0 {
        return Ok(vec![false]);
    }
    let lat = subgroup_lattice(g, caps)?;
    let ks = generated_by_at_most(g, &lat, d - 1);
    Ok(completion_signatures(g, &lat, &ks).into_iter().map(|s| !s.contains(&true)).collect())
}

/// As [`isolated_one_tuples`], from the degrees of the built graph.
pub fn isolated_one_tuples_by_graph(g: &FiniteGroup, caps: &Caps) -> Result<Vec<bool>> {
    let d = min_generators(g);
    if d == 0 {
        return Ok(vec![false]);
    }
    let gg = build_gamma(g, (d - 1).min(1), (d - 1).max(1), caps)?;
    let side = if d == 1 { 1 } else { 0 };
    Ok((0..g.order() as u64).map(|x| gg.is_isolated(side, x)).collect())
}

/// Efficiently generated: every x with d_{x}(G) = d(G) lies in Frat(G).
/// Such x are exactly the 1-tuples isolated in Γ_{1,d-1}(G), and Frattini
/// elements are always among them, so the test is a count.
pub fn is_efficiently_generated(g: &FiniteGroup, caps: &Caps) -> Result<bool> {
    if g.order() == 1 {
        return Ok(true);
    }
    let iso = isolated_one_tuples(g, caps)?;
    let lat = subgroup_lattice(g, caps)?;
    let frat = lat.subgroup(lat.frattini()).order();
    Ok(iso.iter().filter(|&&b| b).count() == frat)
}

/// Non-zero spread: no non-identity 1-tuple is isolated in Γ_{1,d-1}(G).
pub fn has_nonzero_spread(g: &FiniteGroup, caps: &Caps) -> Result<bool> {
    let iso = isolated_one_tuples(g, caps)?;
    Ok(iso.iter().enumerate().all(|(x, &b)| !b || x as u32 == g.identity()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gg_core::group_builtin;

    fn g(s: &str) -> FiniteGroup {
        group_builtin(s, &Caps::default()).unwrap()
    }

    #[test]
    fn sym3_classes() {
        let s3 = g("sym:3");
        let m = equiv_m(&s3, &Caps::default()).unwrap();
        let mut sizes: Vec<usize> = m.classes.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 1, 2]);
        assert_eq!(psi(&s3, &Caps::default()).unwrap(), 2);
        assert!(is_efficiently_generated(&s3, &Caps::default()).unwrap());
        assert!(has_nonzero_spread(&s3, &Caps::default()).unwrap());
    }

    #[test]
    fn cyclic4() {
        let c4 = g("cyclic:4");
        assert!(!has_nonzero_spread(&c4, &Caps::default()).unwrap());
        assert_eq!(psi(&c4, &Caps::default()).unwrap(), 1);
    }
}
