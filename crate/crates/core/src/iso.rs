//! Homomorphisms by generator images: isomorphism tests and Aut(G).

use crate::group::FiniteGroup;

/// Extends `gens[i] -> images[i]` to a homomorphism `g -> h` by walking the
/// right Cayley graph of `g`. Returns `None` if the assignment is not
/// well defined or the generators do not generate `g`.
pub fn extend_hom(g: &FiniteGroup, h: &FiniteGroup, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut map = vec![u32::MAX; n];
    map[0] = 0;
    let mut queue = vec![0u32];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        let fx = map[x as usize];
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s) as usize;
            let fy = h.mul(fx, images[k]);
            if map[y] == u32::MAX {
                map[y] = fy;
                queue.push(y as u32);
            } else if map[y] != fy {
                return None;
            }
        }
        i += 1;
    }
    (queue.len() == n).then_some(map)
}

fn is_bijective(map: &[u32], m: usize) -> bool {
    if map.len() != m {
        return false;
    }
    let mut seen = vec![false; m];
    map.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
}

/// Cheap invariants that isomorphic groups share: order and the sorted
/// element-order multiset.
fn invariants_match(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() || g.is_abelian() != h.is_abelian() {
        return false;
    }
    let mut a = g.element_orders();
    let mut b = h.element_orders();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Visits every bijective homomorphism `g -> h` determined by images of a
/// fixed generating sequence of `g`; stops early when `visit` returns false.
fn search(g: &FiniteGroup, h: &FiniteGroup, mut visit: impl FnMut(Vec<u32>) -> bool) {
    if !invariants_match(g, h) {
        return;
    }
    let gens = g.small_generating_set();
    let go = g.element_orders();
    let ho = h.element_orders();
    let cands: Vec<Vec<u32>> = gens
        .iter()
        .map(|&s| (0..h.order() as u32).filter(|&y| ho[y as usize] == go[s as usize]).collect())
        .collect();
    let mut images = vec![0u32; gens.len()];
    fn rec(
        k: usize,
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[u32],
        cands: &[Vec<u32>],
        images: &mut Vec<u32>,
        visit: &mut dyn FnMut(Vec<u32>) -> bool,
    ) -> bool {
        if k == gens.len() {
            if let Some(m) = extend_hom(g, h, gens, images) {
                if is_bijective(&m, h.order()) {
                    return visit(m);
                }
            }
            return true;
        }
        for &y in &cands[k] {
            images[k] = y;
            if !rec(k + 1, g, h, gens, cands, images, visit) {
                return false;
            }
        }
        true
    }
    rec(0, g, h, &gens, &cands, &mut images, &mut visit);
}

/// An isomorphism `g -> h` as an element map, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<u32>> {
    let mut found = None;
    search(g, h, |m| {
        found = Some(m);
        false
    });
    found
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// All automorphisms of `g` as element maps; the identity map comes first.
pub fn automorphisms(g: &FiniteGroup) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    search(g, g, |m| {
        out.push(m);
        true
    });
    out.sort();
    out
}

/// Whether `map` is a homomorphism `g -> h` (checked on all pairs).
pub fn is_homomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[u32]) -> bool {
    let n = g.order() as u32;
    (0..n).all(|x| (0..n).all(|y| map[g.mul(x, y) as usize] == h.mul(map[x as usize], map[y as usize])))
}
