//! The full subgroup lattice with Möbius values.

use crate::config::Caps;
use crate::error::{cap_check, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{ClosureCache, Subgroup};
use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

/// All subgroups of a group, sorted by `(order, member list)`.
///
/// Index 0 is the trivial subgroup and the last index is the whole group.
pub struct SubgroupLattice {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    gens: Vec<Vec<u32>>,
    supersets: Vec<FixedBitSet>,
    mobius: Vec<i64>,
    maximal: Vec<bool>,
    index: FxHashMap<FixedBitSet, usize>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupLattice({} subgroups)", self.subgroups.len())
    }
}

/// Builds the lattice by joining subgroups with cyclic subgroups of
/// prime-power order until nothing new appears.
pub fn subgroup_lattice(g: &FiniteGroup, caps: &Caps) -> Result<SubgroupLattice> {
    cap_check("group order for the full lattice", g.order() as u128, caps.max_lattice as u128)?;
    let mut cache = ClosureCache::new(g);
    let orders = g.element_orders();
    let mut pp_cyclic = Vec::new();
    for x in 1..g.order() as u32 {
        let id = cache.cyclic(x);
        if crate::arith::prime_power(orders[x as usize] as u64).is_some() && !pp_cyclic.contains(&id) {
            pp_cyclic.push(id);
        }
    }
    cache.full();
    let mut done = 0usize;
    while done < cache.len() {
        let s = done as u32;
        for &c in &pp_cyclic {
            cache.join(s, c);
        }
        done += 1;
    }
    let mut subs: Vec<(Subgroup, Vec<u32>)> =
        (0..cache.len() as u32).map(|i| (cache.sub(i).clone(), cache.gens(i).to_vec())).collect();
    subs.sort_by(|a, b| a.0.cmp(&b.0));
    let (subgroups, gens): (Vec<Subgroup>, Vec<Vec<u32>>) = subs.into_iter().unzip();
    Ok(SubgroupLattice::from_parts(g.order(), subgroups, gens))
}

impl SubgroupLattice {
    fn from_parts(group_order: usize, subgroups: Vec<Subgroup>, gens: Vec<Vec<u32>>) -> Self {
        let m = subgroups.len();
        let mut supersets = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            supersets[i].insert(i);
            let oi = subgroups[i].order();
            for j in i + 1..m {
                let oj = subgroups[j].order();
                if oj > oi && oj % oi == 0 && subgroups[i].is_subset(&subgroups[j]) {
                    supersets[i].insert(j);
                }
            }
        }
        let mut mobius = vec![0i64; m];
        for i in (0..m).rev() {
            mobius[i] = if i == m - 1 { 1 } else { -supersets[i].ones().filter(|&j| j != i).map(|j| mobius[j]).sum::<i64>() };
        }
        let maximal = (0..m).map(|i| i != m - 1 && supersets[i].count_ones(..) == 2).collect();
        let index = subgroups.iter().enumerate().map(|(i, s)| (s.bits().clone(), i)).collect();
        SubgroupLattice { group_order, subgroups, gens, supersets, mobius, maximal, index }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    /// A generating sequence for subgroup `i`.
    pub fn generators(&self, i: usize) -> &[u32] {
        &self.gens[i]
    }

    pub fn full_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// μ_G(H) for subgroup `i`.
    pub fn mobius(&self, i: usize) -> i64 {
        self.mobius[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maximal[i]).collect()
    }

    /// Whether subgroup `i` is contained in subgroup `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.supersets[i].contains(j)
    }

    /// Indices of subgroups containing subgroup `i` (including `i`).
    pub fn supersets(&self, i: usize) -> &FixedBitSet {
        &self.supersets[i]
    }

    pub fn find(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.bits()).copied()
    }

    pub fn find_bits(&self, b: &FixedBitSet) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// The join `<H_i, H_j>`: the smallest common supergroup.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let mut common = self.supersets[i].clone();
        common.intersect_with(&self.supersets[j]);
        common.ones().next().expect("the whole group is a common supergroup")
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let s = self.subgroups[i].intersection(&self.subgroups[j]);
        self.index[s.bits()]
    }

    /// The smallest subgroup containing `x`.
    pub fn cyclic_index(&self, g: &FiniteGroup, x: u32) -> usize {
        self.index[Subgroup::generated(g, &[x]).bits()]
    }

    /// For each subgroup, the set of maximal subgroups (by position in
    /// [`Self::maximal_indices`]) containing it.
    pub fn maximal_masks(&self) -> Vec<FixedBitSet> {
        let maxes = self.maximal_indices();
        (0..self.len())
            .map(|i| {
                let mut b = FixedBitSet::with_capacity(maxes.len());
                for (k, &m) in maxes.iter().enumerate() {
                    if self.leq(i, m) {
                        b.insert(k);
                    }
                }
                b
            })
            .collect()
    }

    /// The Frattini subgroup: intersection of the maximal subgroups.
    pub fn frattini(&self) -> usize {
        let mut b = self.subgroups[self.full_index()].bits().clone();
        for m in self.maximal_indices() {
            b.intersect_with(self.subgroups[m].bits());
        }
        self.index[&b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::*;

    fn lat(g: &FiniteGroup) -> SubgroupLattice {
        subgroup_lattice(g, &Caps::default()).unwrap()
    }

    /// All subgroups by brute force over subsets (small groups only).
    fn brute_subgroups(g: &FiniteGroup) -> usize {
        let n = g.order();
        let mut count = 0;
        for mask in 0u64..(1u64 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let els: Vec<u32> = (0..n as u32).filter(|&x| mask >> x & 1 == 1).collect();
            if els.iter().all(|&x| els.iter().all(|&y| mask >> g.mul(x, y) & 1 == 1)) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_subset_scan() {
        for g in [cyclic(6), permutation_group(3, false), elementary_abelian(2, 3), dihedral(4), dicyclic(2), cyclic(12)] {
            assert_eq!(lat(&g).len(), brute_subgroups(&g));
        }
    }

    #[test]
    fn s3_and_klein() {
        let s3 = lat(&permutation_group(3, false));
        assert_eq!(s3.len(), 6);
        let k = lat(&elementary_abelian(2, 2));
        assert_eq!(k.len(), 5);
        assert_eq!(k.mobius(0), 2);
        for i in 1..4 {
            assert_eq!(k.mobius(i), -1);
        }
        assert_eq!(k.mobius(4), 1);
        assert_eq!(lat(&cyclic(7)).len(), 2);
    }

    #[test]
    fn mobius_recurrence_and_frattini() {
        for s in ["cyclic:4", "sym:4", "alt:5", "sdp:5:4:2", "sdp:5:4:4", "quaternion"] {
            let g = group_builtin(s, &Caps::default()).unwrap();
            let l = lat(&g);
            for i in 0..l.len() {
                let sum: i64 = l.supersets(i).ones().map(|j| l.mobius(j)).sum();
                assert_eq!(sum, if i == l.full_index() { 1 } else { 0 }, "{s}");
            }
            let f = l.subgroup(l.frattini()).order();
            let want = match s {
                "cyclic:4" => 2,
                "quaternion" => 2,
                "sdp:5:4:4" => 2,
                _ => 1,
            };
            assert_eq!(f, want, "{s}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps { max_lattice: 10, ..Caps::default() };
        assert!(subgroup_lattice(&cyclic(12), &caps).is_err());
    }
}
