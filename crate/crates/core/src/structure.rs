//! Structural oracles and normal-subgroup structure.

use crate::arith::factorize;
use crate::config::Caps;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::lattice::{subgroup_lattice, SubgroupLattice};
use crate::products::is_normal;
use crate::subgroup::Subgroup;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub is_soluble: bool,
    pub is_nilpotent: bool,
    pub is_supersoluble: bool,
    pub is_simple: bool,
}

/// The subgroup generated by all conjugates of `xs`.
pub fn normal_closure(g: &FiniteGroup, xs: &[u32]) -> Subgroup {
    let gens = g.small_generating_set();
    let mut set: Vec<u32> = xs.to_vec();
    let mut seen = vec![false; g.order()];
    for &x in xs {
        seen[x as usize] = true;
    }
    let mut i = 0;
    while i < set.len() {
        let x = set[i];
        for &s in &gens {
            let y = g.conj(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                set.push(y);
            }
        }
        i += 1;
    }
    Subgroup::generated(g, &set)
}

pub fn derived_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut comms = Vec::new();
    let mut seen = vec![false; g.order()];
    for &x in h.elements() {
        for &y in h.elements() {
            let c = g.commutator(x, y);
            if !seen[c as usize] {
                seen[c as usize] = true;
                comms.push(c);
            }
        }
    }
    Subgroup::generated(g, &comms)
}

/// Derived series down to its terminal member.
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::full(g)];
    loop {
        let next = derived_subgroup(g, series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_soluble(g: &FiniteGroup) -> bool {
    derived_series(g).last().unwrap().order() == 1
}

pub fn is_cyclic(g: &FiniteGroup) -> bool {
    (0..g.order() as u32).any(|x| g.element_order(x) == g.order())
}

/// Nilpotent iff every Sylow subgroup is normal iff, for each prime `p`, the
/// elements of `p`-power order number exactly `|G|_p`.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    let orders = g.element_orders();
    factorize(g.order() as u64).iter().all(|&(p, e)| {
        let pe = p.pow(e) as usize;
        let count = orders.iter().filter(|&&o| pe % o == 0).count();
        count == pe
    })
}

/// Huppert: every maximal subgroup has prime index.
pub fn is_supersoluble(g: &FiniteGroup, lat: &SubgroupLattice) -> bool {
    lat.maximal_indices()
        .iter()
        .all(|&m| crate::arith::is_prime((g.order() / lat.subgroup(m).order()) as u64))
}

/// Simple iff nontrivial and every nontrivial element has normal closure G.
pub fn is_simple(g: &FiniteGroup) -> bool {
    if g.order() == 1 {
        return false;
    }
    g.conjugacy_classes()
        .iter()
        .filter(|c| c[0] != 0)
        .all(|c| normal_closure(g, &[c[0]]).order() == g.order())
}

pub fn structure_oracles(g: &FiniteGroup, caps: &Caps) -> Result<StructureReport> {
    let lat = subgroup_lattice(g, caps)?;
    Ok(structure_with_lattice(g, &lat))
}

pub fn structure_with_lattice(g: &FiniteGroup, lat: &SubgroupLattice) -> StructureReport {
    StructureReport {
        is_abelian: g.is_abelian(),
        is_cyclic: is_cyclic(g),
        is_soluble: is_soluble(g),
        is_nilpotent: is_nilpotent(g),
        is_supersoluble: is_supersoluble(g, lat),
        is_simple: is_simple(g),
    }
}

/// Indices (into the lattice) of the normal subgroups.
pub fn normal_subgroups(g: &FiniteGroup, lat: &SubgroupLattice) -> Vec<usize> {
    (0..lat.len()).filter(|&i| is_normal(g, lat.subgroup(i))).collect()
}

pub fn minimal_normal(g: &FiniteGroup, lat: &SubgroupLattice) -> Vec<usize> {
    let normals = normal_subgroups(g, lat);
    normals
        .iter()
        .copied()
        .filter(|&i| i != 0)
        .filter(|&i| !normals.iter().any(|&j| j != 0 && j != i && lat.leq(j, i)))
        .collect()
}

pub fn socle(g: &FiniteGroup, lat: &SubgroupLattice) -> usize {
    minimal_normal(g, lat).into_iter().fold(0, |acc, m| lat.join(acc, m))
}
