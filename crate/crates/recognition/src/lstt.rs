//! Recovery from Λ₁*(G) alone.
//!
//! Sorted by ν, the family ends in a run of bipartite components with a
//! common smaller part |G| and a vertex joined to all of it: the graphs
//! Γ*_{1,t}(G) for t ≥ d (t ≥ 2 when G is cyclic). Everything before that
//! run comes from Γ*_{1,d−1}(G), or from Γ*_{1,0} and Γ*_{1,1} when G is
//! cyclic.

use crate::error::{RecognitionError, Result};
use crate::family::{AnonComponent, ComponentFamily, FamilyKind};
use crate::recover::{degrees_are_distinct_prime_products, frattini_rank, to_u64, Recovery};
use crate::solve::solve_dirichlet;
use gg_core::DirichletPolynomial;
use num_bigint::BigInt;

/// Consecutive agreeing estimates of d required before it is accepted.
pub const STABLE_ESTIMATES: usize = 3;

fn ceil_log(n: u128, x: u128) -> usize {
    let mut k = 0;
    let mut p = 1u128;
    while p < x {
        p = p.saturating_mul(n);
        k += 1;
    }
    k
}

fn tail_start(comps: &[&AnonComponent]) -> Option<(usize, u128)> {
    let last = comps.last()?;
    let n = last.parts()?.0;
    let fits = |c: &AnonComponent| c.parts().is_some_and(|p| p.0 == n) && c.has_vertex_joined_to_smaller_part();
    let mut s = comps.len();
    while s > 0 && fits(comps[s - 1]) {
        s -= 1;
    }
    Some((s, n))
}

pub fn lstt_pipeline(f: &ComponentFamily) -> Result<Recovery> {
    if f.kind != FamilyKind::A1 {
        return Err(RecognitionError::WrongKind("an a = 1 family is required"));
    }
    if !f.is_empty() && f.components().iter().all(|c| c.is_k2() || c.is_looped_point()) {
        return Ok(Recovery {
            trivial: true,
            cyclic: true,
            klein_or_dihedral: None,
            d: 0,
            order: 1,
            p: DirichletPolynomial::one(1),
            frattini_order: 1,
            nilpotent: true,
        });
    }
    let mut comps: Vec<&AnonComponent> = f.components().iter().collect();
    comps.sort_by_key(|c| c.nu());
    let cyclic = comps.iter().any(|c| c.has_degree_one());

    let (s, n) = tail_start(&comps).ok_or_else(|| RecognitionError::InconsistentFamily("family does not end in a bipartite graph".into()))?;
    let tail = &comps[s..];
    if tail.len() < STABLE_ESTIMATES {
        return Err(RecognitionError::InsufficientTruncation {
            what: "the a = 1 pipeline (three graphs Γ*_{1,t} with t ≥ d)",
            needed: f.truncation_level + STABLE_ESTIMATES - tail.len(),
            have: f.truncation_level,
        });
    }
    let order = to_u64(n, "order")?;
    if order < 2 {
        return Err(RecognitionError::InconsistentFamily("tail has a one-vertex part".into()));
    }

    // φ at the start of the tail and the first t covered by it
    let (d, b0, mut rows) = if cyclic {
        let star = comps[..s].iter().filter(|c| c.is_star()).collect::<Vec<_>>();
        let [st] = star.as_slice() else {
            return Err(RecognitionError::InconsistentFamily("a cyclic family needs exactly one star".into()));
        };
        let phi1 = st.edge_count();
        let phi2: u128 = comps[..s].iter().filter(|c| !c.is_bipartite()).map(|c| c.two_e_plus_l()).sum();
        (1, 2, vec![(0, BigInt::from(0)), (1, BigInt::from(phi1)), (2, BigInt::from(phi2))])
    } else {
        // d_j = ⌈log_n φ(d + 1 + j)⌉ − 1 − j increases to d
        let est: Vec<i64> = tail
            .iter()
            .enumerate()
            .map(|(j, c)| ceil_log(n, c.edge_count()) as i64 - 1 - j as i64)
            .collect();
        let last = &est[est.len() - STABLE_ESTIMATES..];
        if last.iter().any(|&e| e != last[0]) {
            return Err(if est.windows(2).all(|w| w[0] <= w[1]) {
                RecognitionError::InsufficientTruncation {
                    what: "stable estimates of d(G)",
                    needed: f.truncation_level + 1,
                    have: f.truncation_level,
                }
            } else {
                RecognitionError::InconsistentFamily(format!("estimates of d(G) disagree: {est:?}"))
            });
        }
        let d = last[0];
        if d < 2 || est.iter().any(|&e| e > d) {
            return Err(RecognitionError::InconsistentFamily(format!("estimates of d(G) disagree: {est:?}")));
        }
        let d = d as usize;
        let phi_d: u128 = comps[..s]
            .iter()
            .map(|c| if c.is_bipartite() { c.edge_count() } else { c.two_e_plus_l() })
            .sum();
        let mut rows: Vec<(u32, BigInt)> = (0..d).map(|t| (t as u32, BigInt::from(0))).collect();
        rows.push((d as u32, BigInt::from(phi_d)));
        (d, d, rows)
    };
    for (j, c) in tail.iter().enumerate() {
        rows.push(((b0 + 1 + j) as u32, BigInt::from(c.edge_count())));
    }
    let p = solve_dirichlet(order, &rows)?;

    let t = frattini_rank(order, d);
    let frat_graph = tail.get(t - b0).ok_or(RecognitionError::InsufficientTruncation {
        what: "the Frattini graph Γ*_{1,t}",
        needed: t + 1,
        have: f.truncation_level,
    })?;
    let frattini_order = to_u64(frat_graph.isolated_after_removing_universal().unwrap(), "Frattini order")?;

    let nilpotent = cyclic || (p.q_factorisation().is_some() && degrees_are_distinct_prime_products(tail[0], order));

    Ok(Recovery { trivial: false, cyclic, klein_or_dihedral: None, d, order, p, frattini_order, nilpotent })
}
