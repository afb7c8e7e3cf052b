//! Crown-based powers L_t.

use crate::error::{ConstructionError, Result};
use gg_core::error::cap_check;
use gg_core::structure::minimal_normal;
use gg_core::{subgroup_lattice, Caps, FiniteGroup, Subgroup};

/// L_t = {(l_1, …, l_t) ∈ L^t : l_1 ≡ … ≡ l_t mod A}, where A must be the
/// unique minimal normal subgroup of L.
///
/// The element (l, l·a_2, …, l·a_t) has index l + |L|·Σ_i k_i |A|^(i-2),
/// with k_i the position of a_i in the sorted member list of A.
pub fn crown_power(l: &FiniteGroup, a: &Subgroup, t: usize, caps: &Caps) -> Result<FiniteGroup> {
    if t == 0 {
        return Err(gg_core::GroupError::ParameterOutOfRange("t must be positive".into()).into());
    }
    let lat = subgroup_lattice(l, caps)?;
    let mins = minimal_normal(l, &lat);
    if mins.len() != 1 || lat.subgroup(mins[0]) != a {
        return Err(ConstructionError::NotUniqueMinimalNormal);
    }
    let (nl, na) = (l.order(), a.order());
    let order = (nl as u128) * (na as u128).pow(t as u32 - 1);
    cap_check("order of the crown-based power", order, caps.max_lattice as u128)?;
    let order = order as usize;
    let members = a.elements();
    let mut pos = vec![usize::MAX; nl];
    for (i, &x) in members.iter().enumerate() {
        pos[x as usize] = i;
    }
    let decode = |mut k: usize| -> Vec<u32> {
        let head = (k % nl) as u32;
        k /= nl;
        let mut out = vec![head];
        for _ in 1..t {
            out.push(l.mul(head, members[k % na]));
            k /= na;
        }
        out
    };
    let encode = |c: &[u32]| -> usize {
        let inv = l.inv(c[0]);
        let mut k = 0;
        for x in c[1..].iter().rev() {
            k = k * na + pos[l.mul(inv, *x) as usize];
        }
        c[0] as usize + nl * k
    };
    let names = (0..order)
        .map(|k| {
            let parts: Vec<String> = decode(k).iter().map(|&x| l.name(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(FiniteGroup::from_fn(order, Some(names), |x, y| {
        let (cx, cy) = (decode(x), decode(y));
        let prod: Vec<u32> = cx.iter().zip(&cy).map(|(&p, &q)| l.mul(p, q)).collect();
        encode(&prod)
    })?)
}
