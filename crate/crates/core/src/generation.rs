//! Generation invariants: d(G), φ_G(t) by enumeration and by Hall's formula,
//! and lifting generating tuples through quotients.

use crate::config::Caps;
use crate::error::{cap_check, GroupError, Result};
use crate::group::FiniteGroup;
use crate::lattice::SubgroupLattice;
use crate::products::{is_normal, quotient};
use crate::subgroup::{ClosureCache, SubId, Subgroup};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

/// Elements sorted by decreasing order, identity excluded.
fn by_decreasing_order(g: &FiniteGroup) -> Vec<u32> {
    let orders = g.element_orders();
    let mut els: Vec<u32> = (1..g.order() as u32).collect();
    els.sort_by_key(|&x| (std::cmp::Reverse(orders[x as usize]), x));
    els
}

/// d(G), the least size of a generating set (0 for the trivial group).
pub fn min_generators(g: &FiniteGroup) -> usize {
    if g.order() == 1 {
        return 0;
    }
    let mut cache = ClosureCache::new(g);
    let els = by_decreasing_order(g);
    let mut memo: FxHashMap<(SubId, usize), bool> = FxHashMap::default();
    fn reach(
        s: SubId,
        rem: usize,
        cache: &mut ClosureCache,
        els: &[u32],
        memo: &mut FxHashMap<(SubId, usize), bool>,
    ) -> bool {
        if cache.is_full(s) {
            return true;
        }
        if rem == 0 {
            return false;
        }
        if let Some(&r) = memo.get(&(s, rem)) {
            return r;
        }
        let mut r = false;
        for &x in els {
            if cache.sub(s).contains(x) {
                continue;
            }
            let t = cache.join_elem(s, x);
            if reach(t, rem - 1, cache, els, memo) {
                r = true;
                break;
            }
        }
        memo.insert((s, rem), r);
        r
    }
    (1..).find(|&t| reach(0, t, &mut cache, &els, &mut memo)).unwrap()
}

/// φ_G(t) by walking all t-tuples in lexicographic order. A prefix that
/// already generates G contributes |G|^remaining without further descent.
pub fn phi_enumerate(g: &FiniteGroup, t: usize, caps: &Caps) -> Result<BigInt> {
    let n = g.order() as u128;
    let total = n.checked_pow(t as u32).unwrap_or(u128::MAX);
    cap_check("tuple count |G|^t", total, caps.max_vertices as u128)?;
    let mut cache = ClosureCache::new(g);
    let pows: Vec<BigInt> = (0..=t).map(|k| BigInt::from(n).pow(k as u32)).collect();
    fn walk(s: SubId, rem: usize, cache: &mut ClosureCache, pows: &[BigInt], n: u32) -> BigInt {
        if cache.is_full(s) {
            return pows[rem].clone();
        }
        if rem == 0 {
            return BigInt::zero();
        }
        let mut acc = BigInt::zero();
        for x in 0..n {
            let t = cache.join_elem(s, x);
            acc += walk(t, rem - 1, cache, pows, n);
        }
        acc
    }
    Ok(walk(0, t, &mut cache, &pows, n as u32))
}

/// φ_G(t) = Σ_H μ_G(H) |H|^t over the subgroup lattice.
pub fn phi_hall(lat: &SubgroupLattice, t: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, h) in lat.subgroups().iter().enumerate() {
        let m = lat.mobius(i);
        if m != 0 {
            acc += BigInt::from(m) * BigInt::from(h.order()).pow(t as u32);
        }
    }
    acc
}

/// Number of elements `y` with `<K, y...>` generating, i.e.
/// Σ_{H ≥ K} μ_G(H) |H|^s for `K` the subgroup at lattice index `k`.
pub fn completions_by_formula(lat: &SubgroupLattice, k: usize, s: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for j in lat.supersets(k).ones() {
        let m = lat.mobius(j);
        if m != 0 {
            acc += BigInt::from(m) * BigInt::from(lat.subgroup(j).order()).pow(s as u32);
        }
    }
    acc
}

/// Lifts a generating tuple of `G/N` to a generating tuple of `G` with the
/// same cosets. `quotient_tuple` holds coset numbers as produced by
/// [`quotient`].
pub fn gaschutz_lift(g: &FiniteGroup, nsub: &Subgroup, quotient_tuple: &[u32], d: usize) -> Result<Vec<u32>> {
    if !is_normal(g, nsub) {
        return Err(GroupError::NotNormal);
    }
    if quotient_tuple.len() != d {
        return Err(GroupError::Parse(format!("expected {d} cosets, got {}", quotient_tuple.len())));
    }
    let dg = min_generators(g);
    if d < dg {
        return Err(GroupError::DTooSmall { d, min: dg });
    }
    let (q, coset) = quotient(g, nsub)?;
    if quotient_tuple.iter().any(|&c| c as usize >= q.order()) || !q.generates(quotient_tuple) {
        return Err(GroupError::QuotientTupleNotGenerating);
    }
    let members: Vec<Vec<u32>> = quotient_tuple
        .iter()
        .map(|&c| (0..g.order() as u32).filter(|&x| coset[x as usize] == c).collect())
        .collect();
    let mut cache = ClosureCache::new(g);
    let mut out = Vec::with_capacity(d);
    fn rec(k: usize, s: SubId, members: &[Vec<u32>], cache: &mut ClosureCache, out: &mut Vec<u32>) -> bool {
        if k == members.len() {
            return cache.is_full(s);
        }
        for &x in &members[k] {
            let t = cache.join_elem(s, x);
            out.push(x);
            if rec(k + 1, t, members, cache, out) {
                return true;
            }
            out.pop();
        }
        false
    }
    if rec(0, 0, &members, &mut cache, &mut out) {
        Ok(out)
    } else {
        // Gaschütz's theorem rules this out; reaching it means bad input.
        Err(GroupError::QuotientTupleNotGenerating)
    }
}

/// |G|^t as a big integer.
pub fn order_pow(g: &FiniteGroup, t: usize) -> BigInt {
    let mut r = BigInt::one();
    for _ in 0..t {
        r *= g.order();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::*;
    use crate::lattice::subgroup_lattice;

    fn g(s: &str) -> FiniteGroup {
        group_builtin(s, &Caps::default()).unwrap()
    }

    #[test]
    fn d_values() {
        assert_eq!(min_generators(&g("trivial")), 0);
        assert_eq!(min_generators(&g("cyclic:6")), 1);
        assert_eq!(min_generators(&g("klein")), 2);
        assert_eq!(min_generators(&g("elemab:2:3")), 3);
        assert_eq!(min_generators(&g("sym:4")), 2);
        assert_eq!(min_generators(&g("alt:5")), 2);
    }

    #[test]
    fn phi_examples() {
        let caps = Caps::default();
        assert_eq!(phi_enumerate(&g("cyclic:6"), 1, &caps).unwrap(), 2.into());
        assert_eq!(phi_enumerate(&g("klein"), 2, &caps).unwrap(), 6.into());
        assert_eq!(phi_enumerate(&g("sym:3"), 2, &caps).unwrap(), 18.into());
        let s3 = subgroup_lattice(&g("sym:3"), &caps).unwrap();
        assert_eq!(phi_hall(&s3, 2), 18.into());
        assert_eq!(phi_hall(&s3, 1), 0.into());
        let d5 = subgroup_lattice(&g("dihedral:5"), &caps).unwrap();
        assert_eq!(phi_hall(&d5, 2), 60.into());
        assert_eq!(phi_hall(&subgroup_lattice(&g("trivial"), &caps).unwrap(), 0), 1.into());
    }

    #[test]
    fn enumeration_cap() {
        let caps = Caps { max_vertices: 1000, ..Caps::default() };
        assert!(phi_enumerate(&g("alt:5"), 2, &caps).is_err());
    }

    #[test]
    fn lifts() {
        let c4 = g("cyclic:4");
        let n = Subgroup::from_elements(&c4, &[0, 2]);
        let (_, coset) = quotient(&c4, &n).unwrap();
        let x = gaschutz_lift(&c4, &n, &[1], 1).unwrap();
        assert_eq!(coset[x[0] as usize], 1);
        assert!(c4.generates(&x));

        let s3 = g("sym:3");
        let c3 = Subgroup::generated(&s3, &[(0..6).find(|&x| s3.element_order(x) == 3).unwrap()]);
        let (q, coset) = quotient(&s3, &c3).unwrap();
        assert_eq!(q.order(), 2);
        let lifted = gaschutz_lift(&s3, &c3, &[0, 1], 2).unwrap();
        assert_eq!(coset[lifted[0] as usize], 0);
        assert_eq!(coset[lifted[1] as usize], 1);
        assert!(s3.generates(&lifted));

        assert_eq!(gaschutz_lift(&s3, &c3, &[1], 1).unwrap_err(), GroupError::DTooSmall { d: 1, min: 2 });
        assert_eq!(gaschutz_lift(&s3, &c3, &[0, 0], 2).unwrap_err(), GroupError::QuotientTupleNotGenerating);
    }
}
