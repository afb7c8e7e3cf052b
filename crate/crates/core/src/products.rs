//! Direct products, semidirect products and quotients.

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// `G × H`; the pair `(g, h)` has index `g*|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    let names = match (g.names(), h.names()) {
        (Some(a), Some(b)) => Some(
            (0..g.order() * m)
                .map(|k| format!("({},{})", a[k / m], b[k % m]))
                .collect(),
        ),
        _ => None,
    };
    FiniteGroup::from_fn(g.order() * m, names, |x, y| {
        g.mul((x / m) as u32, (y / m) as u32) as usize * m + h.mul((x % m) as u32, (y % m) as u32) as usize
    })
    .expect("direct product")
}

/// `N ⋊ H` where `action[h]` is the permutation of `N` induced by `h`
/// (a left action: `h n h^-1 = action[h][n]`). The pair `(n, h)` stands for
/// `n·h` and has index `n*|H| + h`.
pub fn semidirect_product(n: &FiniteGroup, h: &FiniteGroup, action: &[Vec<u32>]) -> Result<FiniteGroup> {
    let (nn, nh) = (n.order(), h.order());
    if action.len() != nh || action.iter().any(|p| p.len() != nn) {
        return Err(GroupError::ActionNotHomomorphism("action has the wrong shape".into()));
    }
    for (hi, p) in action.iter().enumerate() {
        let mut seen = vec![false; nn];
        for &v in p {
            if v as usize >= nn || std::mem::replace(&mut seen[v as usize], true) {
                return Err(GroupError::ActionNotHomomorphism(format!("image of {hi} is not a permutation")));
            }
        }
        for a in 0..nn as u32 {
            for b in 0..nn as u32 {
                if p[n.mul(a, b) as usize] != n.mul(p[a as usize], p[b as usize]) {
                    return Err(GroupError::ActionNotHomomorphism(format!("image of {hi} is not an automorphism")));
                }
            }
        }
    }
    for x in 0..nh as u32 {
        for y in 0..nh as u32 {
            let xy = h.mul(x, y) as usize;
            for v in 0..nn {
                if action[xy][v] != action[x as usize][action[y as usize][v] as usize] {
                    return Err(GroupError::ActionNotHomomorphism(format!("fails on the pair ({x},{y})")));
                }
            }
        }
    }
    FiniteGroup::from_fn(nn * nh, None, |x, y| {
        let (n1, h1) = ((x / nh) as u32, (x % nh) as u32);
        let (n2, h2) = ((y / nh) as u32, (y % nh) as u32);
        let nprod = n.mul(n1, action[h1 as usize][n2 as usize]);
        nprod as usize * nh + h.mul(h1, h2) as usize
    })
}

/// Whether `sub` is normal in `g` (closed under conjugation by a generating set).
pub fn is_normal(g: &FiniteGroup, sub: &Subgroup) -> bool {
    let gens = g.small_generating_set();
    sub.elements().iter().all(|&x| gens.iter().all(|&s| sub.contains(g.conj(x, s))))
}

/// `G/N`; cosets are numbered in order of their least member.
pub fn quotient(g: &FiniteGroup, nsub: &Subgroup) -> Result<(FiniteGroup, Vec<u32>)> {
    if !is_normal(g, nsub) {
        return Err(GroupError::NotNormal);
    }
    let n = g.order();
    let mut coset = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n as u32 {
        if coset[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &k in nsub.elements() {
            coset[g.mul(x, k) as usize] = id;
        }
    }
    let q = FiniteGroup::from_fn(reps.len(), None, |a, b| coset[g.mul(reps[a], reps[b]) as usize] as usize)?;
    Ok((q, coset))
}
