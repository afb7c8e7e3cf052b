//! Subgroups as bit sets, and a memoising closure engine.

use crate::group::FiniteGroup;
use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

/// A subgroup given by its member set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    bits: FixedBitSet,
    elems: Vec<u32>,
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    /// By order, then by sorted member list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.elems.len(), &self.elems).cmp(&(other.elems.len(), &other.elems))
    }
}

impl Subgroup {
    /// Wraps a member list that is already known to be a subgroup.
    pub fn from_elements(g: &FiniteGroup, elems: &[u32]) -> Self {
        let mut bits = FixedBitSet::with_capacity(g.order());
        for &x in elems {
            bits.insert(x as usize);
        }
        Self::from_bits(bits)
    }

    pub fn from_bits(bits: FixedBitSet) -> Self {
        let elems = bits.ones().map(|x| x as u32).collect();
        Subgroup { bits, elems }
    }

    pub fn generated(g: &FiniteGroup, gens: &[u32]) -> Self {
        Self::from_elements(g, &g.generated(gens))
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_elements(g, &[0])
    }

    pub fn full(g: &FiniteGroup) -> Self {
        let mut bits = FixedBitSet::with_capacity(g.order());
        bits.insert_range(..);
        Self::from_bits(bits)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.bits.contains(x as usize)
    }

    /// Sorted member list.
    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.elems.len() <= other.elems.len() && self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut b = self.bits.clone();
        b.intersect_with(&other.bits);
        Subgroup::from_bits(b)
    }

    /// Checks the subgroup axioms against `g` (used by tests and imports).
    pub fn is_closed(&self, g: &FiniteGroup) -> bool {
        self.contains(0)
            && self.elems.iter().all(|&x| self.contains(g.inv(x)))
            && self.elems.iter().all(|&x| self.elems.iter().all(|&y| self.contains(g.mul(x, y))))
    }
}

/// Index of a subgroup interned in a [`ClosureCache`].
pub type SubId = u32;

struct Entry {
    sub: Subgroup,
    gens: Vec<u32>,
}

/// Interns subgroups reached by closure and memoises joins.
///
/// Subgroups are identified by their member bit set; `join_elem(s, x)` is
/// `<s, x>`, computed once per `(s, x)`.
pub struct ClosureCache<'g> {
    g: &'g FiniteGroup,
    entries: Vec<Entry>,
    index: FxHashMap<FixedBitSet, SubId>,
    pair: FxHashMap<(SubId, u32), SubId>,
    rows: Vec<Option<Box<[SubId]>>>,
    joins: FxHashMap<(SubId, SubId), SubId>,
    full: Option<SubId>,
}

impl<'g> ClosureCache<'g> {
    pub fn new(g: &'g FiniteGroup) -> Self {
        let mut c = ClosureCache {
            g,
            entries: Vec::new(),
            index: FxHashMap::default(),
            pair: FxHashMap::default(),
            rows: Vec::new(),
            joins: FxHashMap::default(),
            full: None,
        };
        let t = Subgroup::trivial(g);
        c.intern(t, Vec::new());
        if g.order() == 1 {
            c.full = Some(0);
        }
        c
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.g
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trivial(&self) -> SubId {
        0
    }

    pub fn sub(&self, id: SubId) -> &Subgroup {
        &self.entries[id as usize].sub
    }

    pub fn gens(&self, id: SubId) -> &[u32] {
        &self.entries[id as usize].gens
    }

    pub fn lookup(&self, bits: &FixedBitSet) -> Option<SubId> {
        self.index.get(bits).copied()
    }

    /// Interns a subgroup, returning the existing id if already present.
    pub fn intern(&mut self, sub: Subgroup, gens: Vec<u32>) -> SubId {
        if let Some(&id) = self.index.get(sub.bits()) {
            return id;
        }
        let id = self.entries.len() as SubId;
        if sub.order() == self.g.order() {
            self.full = Some(id);
        }
        self.index.insert(sub.bits().clone(), id);
        self.entries.push(Entry { sub, gens });
        self.rows.push(None);
        id
    }

    pub fn full(&mut self) -> SubId {
        if let Some(f) = self.full {
            return f;
        }
        let gens = self.g.small_generating_set();
        self.intern(Subgroup::full(self.g), gens)
    }

    pub fn is_full(&self, id: SubId) -> bool {
        self.entries[id as usize].sub.order() == self.g.order()
    }

    /// `<base, new_gens>`, by adding right cosets of `base` until closed.
    /// Returns the whole group as soon as more than half of it is reached.
    fn extend(&mut self, base: SubId, new_gens: &[u32]) -> SubId {
        let g = self.g;
        let n = g.order();
        let h = &self.entries[base as usize];
        let fresh: Vec<u32> = new_gens.iter().copied().filter(|&x| !h.sub.contains(x)).collect();
        if fresh.is_empty() {
            return base;
        }
        let mut gens = h.gens.clone();
        gens.extend_from_slice(&fresh);
        let hel: Vec<u32> = h.sub.elements().to_vec();
        let mut bits = h.sub.bits().clone();
        let mut size = hel.len();
        let mut reps: Vec<u32> = vec![0];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &s in &gens {
                let x = g.mul(r, s);
                if !bits.contains(x as usize) {
                    for &k in &hel {
                        bits.insert(g.mul(k, x) as usize);
                    }
                    size += hel.len();
                    if 2 * size > n {
                        return self.full();
                    }
                    reps.push(x);
                }
            }
            i += 1;
        }
        if let Some(&id) = self.index.get(&bits) {
            return id;
        }
        self.intern(Subgroup::from_bits(bits), gens)
    }

    /// `<s, x>`.
    pub fn join_elem(&mut self, s: SubId, x: u32) -> SubId {
        if self.entries[s as usize].sub.contains(x) {
            return s;
        }
        if let Some(row) = &self.rows[s as usize] {
            return row[x as usize];
        }
        if let Some(&t) = self.pair.get(&(s, x)) {
            return t;
        }
        let t = self.extend(s, &[x]);
        self.pair.insert((s, x), t);
        t
    }

    /// The full row `x -> <s, x>`, computed once.
    pub fn join_row(&mut self, s: SubId) -> &[SubId] {
        if self.rows[s as usize].is_none() {
            let n = self.g.order() as u32;
            let row: Vec<SubId> = (0..n).map(|x| self.join_elem(s, x)).collect();
            self.rows[s as usize] = Some(row.into_boxed_slice());
        }
        self.rows[s as usize].as_deref().unwrap()
    }

    /// `<s, t>`.
    pub fn join(&mut self, s: SubId, t: SubId) -> SubId {
        if s == t {
            return s;
        }
        let (a, b) = if s < t { (s, t) } else { (t, s) };
        if let Some(&r) = self.joins.get(&(a, b)) {
            return r;
        }
        let (sa, sb) = (&self.entries[a as usize].sub, &self.entries[b as usize].sub);
        let r = if sa.is_subset(sb) {
            b
        } else if sb.is_subset(sa) {
            a
        } else {
            let (big, small) = if sa.order() >= sb.order() { (a, b) } else { (b, a) };
            let gens = self.entries[small as usize].gens.clone();
            self.extend(big, &gens)
        };
        self.joins.insert((a, b), r);
        r
    }

    /// Subgroup generated by a tuple, left to right.
    pub fn tuple(&mut self, xs: &[u32]) -> SubId {
        let mut s = self.trivial();
        for &x in xs {
            s = self.join_elem(s, x);
        }
        s
    }

    /// `<x>`.
    pub fn cyclic(&mut self, x: u32) -> SubId {
        self.join_elem(0, x)
    }

    /// Interns the subgroup generated by an arbitrary set.
    pub fn generated_by(&mut self, xs: &[u32]) -> SubId {
        self.tuple(xs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{cyclic, permutation_group};

    #[test]
    fn joins_in_s3() {
        let g = permutation_group(3, false);
        let mut c = ClosureCache::new(&g);
        let t = c.cyclic(1);
        assert_eq!(c.sub(t).order(), 2);
        let f = c.join_elem(t, 3);
        assert!(c.is_full(f));
        let r = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let c3 = c.cyclic(r);
        assert_eq!(c.sub(c3).order(), 3);
        let j = c.join(c3, t);
        assert!(c.is_full(j));
    }

    #[test]
    fn closure_matches_naive() {
        let g = cyclic(12);
        let mut c = ClosureCache::new(&g);
        for x in 0..12 {
            for y in 0..12 {
                let s = c.tuple(&[x, y]);
                assert_eq!(c.sub(s).elements(), g.generated(&[x, y]).as_slice());
            }
        }
    }
}
