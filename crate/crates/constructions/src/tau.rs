//! τ_d(S): the number of Aut(S)-orbits on generating d-tuples of a
//! non-abelian simple group S.

use crate::error::{ConstructionError, Result};
use gg_core::error::cap_check;
use gg_core::iso::automorphisms;
use gg_core::structure::is_simple;
use gg_core::{Caps, ClosureCache, FiniteGroup};
use serde::Serialize;

pub const TAU_MAX_ORDER: usize = 360;
pub const TAU_MAX_D: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub d: usize,
    /// φ_S(d), counted while partitioning.
    pub phi: u64,
    pub aut_order: u64,
    /// Number of orbits, τ_d(S).
    pub orbits: u64,
    /// Every orbit has |Aut(S)| elements.
    pub all_regular: bool,
}

pub fn tau_d(s: &FiniteGroup, d: usize, caps: &Caps) -> Result<TauReport> {
    if s.is_abelian() || !is_simple(s) {
        return Err(ConstructionError::NotSimple);
    }
    cap_check("order of the simple group", s.order() as u128, TAU_MAX_ORDER as u128)?;
    if d == 0 || d > TAU_MAX_D {
        return Err(gg_core::GroupError::ParameterOutOfRange(format!("d = {d} is outside 1..={TAU_MAX_D}")).into());
    }
    let n = s.order() as u64;
    let total = n.pow(d as u32);
    cap_check("tuple space", total as u128, caps.max_vertices as u128)?;
    let auts = automorphisms(s);
    let mut cache = ClosureCache::new(s);
    let decode = |mut c: u64| {
        let mut t = vec![0u32; d];
        for x in t.iter_mut().rev() {
            *x = (c % n) as u32;
            c /= n;
        }
        t
    };
    let encode = |t: &[u32]| t.iter().fold(0u64, |acc, &x| acc * n + x as u64);
    let mut done = fixedbitset::FixedBitSet::with_capacity(total as usize);
    let (mut phi, mut orbits, mut all_regular) = (0u64, 0u64, true);
    for code in 0..total {
        if done.contains(code as usize) {
            continue;
        }
        let t = decode(code);
        let id = cache.tuple(&t);
        if !cache.is_full(id) {
            continue;
        }
        orbits += 1;
        let mut size = 0u64;
        for a in &auts {
            let img: Vec<u32> = t.iter().map(|&x| a[x as usize]).collect();
            if !done.put(encode(&img) as usize) {
                size += 1;
            }
        }
        phi += size;
        all_regular &= size == auts.len() as u64;
    }
    Ok(TauReport { d, phi, aut_order: auts.len() as u64, orbits, all_regular })
}
