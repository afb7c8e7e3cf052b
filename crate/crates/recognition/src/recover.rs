//! Label-blind recovery of group invariants from Λ*(G).

use crate::error::{RecognitionError, Result};
use crate::family::{AnonComponent, ComponentFamily, FamilyKind};
use crate::solve::solve_dirichlet;
use crate::unfat::{is_squarefree_multiset, unfat_factor};
use gg_core::arith::{big_omega, is_prime};
use gg_core::DirichletPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicVerdict {
    pub is_cyclic: bool,
    pub order: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KleinDihedralVerdict {
    pub matched: bool,
    pub klein: bool,
    /// |G|: 4 for the Klein group, 2p for D_p.
    pub order: Option<u64>,
}

/// Everything the pipeline recovers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovery {
    pub trivial: bool,
    pub cyclic: bool,
    pub klein_or_dihedral: Option<KleinDihedralVerdict>,
    pub d: usize,
    pub order: u64,
    pub p: DirichletPolynomial,
    pub frattini_order: u64,
    pub nilpotent: bool,
}

impl Recovery {
    pub fn to_json(&self) -> Value {
        json!({
            "trivial": self.trivial,
            "cyclic": self.cyclic,
            "klein_or_dihedral": self.klein_or_dihedral,
            "d": self.d,
            "order": self.order,
            "P": self.p.to_json(),
            "P_display": self.p.display_product(),
            "frattini_order": self.frattini_order,
            "nilpotent": self.nilpotent,
        })
    }

    fn trivial_group() -> Self {
        Recovery {
            trivial: true,
            cyclic: true,
            klein_or_dihedral: None,
            d: 0,
            order: 1,
            p: DirichletPolynomial::one(1),
            frattini_order: 1,
            nilpotent: true,
        }
    }
}

fn require_full(f: &ComponentFamily) -> Result<()> {
    if f.kind != FamilyKind::Full {
        return Err(RecognitionError::WrongKind("a full family is required"));
    }
    Ok(())
}

fn require_level(f: &ComponentFamily, what: &'static str, needed: usize) -> Result<()> {
    if f.truncation_level < needed {
        return Err(RecognitionError::InsufficientTruncation { what, needed, have: f.truncation_level });
    }
    Ok(())
}

/// Every component is K_2 or a looped vertex: the family of the trivial group.
pub(crate) fn is_trivial_family(f: &ComponentFamily) -> bool {
    !f.is_empty() && f.components().iter().all(|c| c.is_k2() || c.is_looped_point())
}

pub(crate) fn to_u64(x: u128, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| RecognitionError::InconsistentFamily(format!("{what} = {x} is out of range")))
}

/// Cyclic iff two stars have no bipartite non-star component with the same
/// number of edges; then |G| is the smaller part of the bipartite non-star
/// component whose edge count is the third star's leaf count.
pub fn recognize_cyclic(f: &ComponentFamily) -> Result<CyclicVerdict> {
    require_full(f)?;
    require_level(f, "cyclicity test", 3)?;
    if is_trivial_family(f) {
        return Ok(CyclicVerdict { is_cyclic: true, order: Some(1) });
    }
    let comps = f.components();
    let others = |e: u128| comps.iter().any(|c| c.is_bipartite() && !c.is_star() && c.edge_count() == e);
    let mut stars: Vec<u128> = comps.iter().filter_map(|c| c.star_leaves()).collect();
    stars.sort_unstable();
    let unmatched = stars.iter().filter(|&&u| !others(u)).count();
    if unmatched < 2 {
        return Ok(CyclicVerdict { is_cyclic: false, order: None });
    }
    let u2 = *stars.get(2).ok_or(RecognitionError::InsufficientTruncation {
        what: "order of a cyclic group (third star)",
        needed: 3,
        have: f.truncation_level,
    })?;
    let cands: Vec<&AnonComponent> =
        comps.iter().filter(|c| c.is_bipartite() && !c.is_star() && c.edge_count() == u2).collect();
    match cands.as_slice() {
        [c] => Ok(CyclicVerdict { is_cyclic: true, order: Some(to_u64(c.parts().unwrap().0, "order")?) }),
        _ => Err(RecognitionError::InconsistentFamily(format!(
            "expected one bipartite component with {u2} edges, found {}",
            cands.len()
        ))),
    }
}

/// For non-cyclic G: the Klein group iff K_3 occurs; D_p iff a component
/// with a 3-cycle has a loop-free vertex adjacent to all others, with p read
/// from φ(2) = 3p(p − 1), the smallest star.
pub fn recognize_klein_or_dihedral(f: &ComponentFamily) -> Result<KleinDihedralVerdict> {
    require_full(f)?;
    require_level(f, "Klein/dihedral test", 2)?;
    let comps = f.components();
    if comps.iter().any(|c| c.is_k3()) {
        return Ok(KleinDihedralVerdict { matched: true, klein: true, order: Some(4) });
    }
    if !comps.iter().any(|c| c.has_3cycle() && c.has_loopless_universal_vertex()) {
        return Ok(KleinDihedralVerdict { matched: false, klein: false, order: None });
    }
    let phi2 = comps
        .iter()
        .filter_map(|c| c.star_leaves())
        .min()
        .ok_or(RecognitionError::InsufficientTruncation { what: "dihedral order (a star)", needed: 2, have: f.truncation_level })?;
    // 3p^2 - 3p - φ = 0
    let disc = 9 + 12 * phi2;
    let root = disc.isqrt();
    if root * root != disc || (3 + root) % 6 != 0 {
        return Err(RecognitionError::InconsistentFamily(format!("φ(2) = {phi2} is not 3p(p-1)")));
    }
    let p = to_u64((3 + root) / 6, "p")?;
    if !is_prime(p) || p == 2 {
        return Err(RecognitionError::InconsistentFamily(format!("p = {p} is not an odd prime")));
    }
    Ok(KleinDihedralVerdict { matched: true, klein: false, order: Some(2 * p) })
}

/// d(G) and the star leaf counts u_i = φ(d + i).
#[derive(Clone, Debug)]
pub(crate) struct Ladder {
    pub d: usize,
    pub stars: Vec<u128>,
}

impl Ladder {
    fn level_of(&self, nu: u128) -> Option<usize> {
        if nu <= self.stars[0] {
            return Some(self.d);
        }
        self.stars.iter().position(|&u| u == nu).map(|i| self.d + i)
    }
}

fn ladder(f: &ComponentFamily) -> Result<Ladder> {
    require_full(f)?;
    if is_trivial_family(f) {
        return Err(RecognitionError::InconsistentFamily("the trivial group has no level structure".into()));
    }
    let mut stars: Vec<u128> = f.components().iter().filter_map(|c| c.star_leaves()).collect();
    stars.sort_unstable();
    if stars.windows(2).any(|w| w[0] == w[1]) {
        return Err(RecognitionError::InconsistentFamily("two stars with the same number of leaves".into()));
    }
    if recognize_cyclic(f)?.is_cyclic {
        return Ok(Ladder { d: 1, stars });
    }
    if stars.len() < 2 {
        return Err(RecognitionError::InsufficientTruncation {
            what: "d(G) (two stars)",
            needed: f.truncation_level + 2 - stars.len(),
            have: f.truncation_level,
        });
    }
    let u1 = stars[1];
    let omega: Vec<&AnonComponent> = f.components().iter().filter(|c| c.nu() == u1).collect();
    let x = omega.iter().filter(|c| c.is_bipartite() && !c.is_star()).count();
    let tri = omega.iter().filter(|c| c.has_3cycle()).count();
    if tri > 1 || omega.iter().filter(|c| c.is_star()).count() != 1 {
        return Err(RecognitionError::InconsistentFamily(format!("components with ν = {u1} do not fit one level")));
    }
    Ok(Ladder { d: 2 * x + tri, stars })
}

/// d(G) from the components at the level of the second star.
pub fn recover_d(f: &ComponentFamily) -> Result<usize> {
    if is_trivial_family(f) {
        require_full(f)?;
        return Ok(0);
    }
    Ok(ladder(f)?.d)
}

fn level_in(lad: &Ladder, c: &AnonComponent) -> Result<usize> {
    lad.level_of(c.nu())
        .ok_or_else(|| RecognitionError::InconsistentFamily(format!("ν = {} matches no star", c.nu())))
}

/// Level a + b of component `idx`.
pub fn component_level(f: &ComponentFamily, idx: usize) -> Result<usize> {
    let c = f.components().get(idx).ok_or(RecognitionError::NoSuchComponent(idx))?;
    let lad = ladder(f)?;
    level_in(&lad, c)
}

/// The bipartite non-star components of level r, sorted by smaller part;
/// position i holds Γ*_{i+1, r-i-1}.
fn sorted_bipartite_at(f: &ComponentFamily, lad: &Ladder, r: usize) -> Result<Vec<usize>> {
    let mut idx: Vec<usize> = (0..f.len())
        .filter(|&i| {
            let c = &f.components()[i];
            c.is_bipartite() && !c.is_star() && lad.level_of(c.nu()) == Some(r)
        })
        .collect();
    idx.sort_by_key(|&i| f.components()[i].parts().unwrap().0);
    let sizes: Vec<u128> = idx.iter().map(|&i| f.components()[i].parts().unwrap().0).collect();
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(RecognitionError::InconsistentFamily(format!("level {r}: smaller parts are not strictly increasing")));
    }
    Ok(idx)
}

/// The (a, b) with component `idx` ≅ Γ*_{a,b}(G); defined above level d.
pub fn recover_ab(f: &ComponentFamily, idx: usize) -> Result<(usize, usize)> {
    let c = f.components().get(idx).ok_or(RecognitionError::NoSuchComponent(idx))?;
    let lad = ladder(f)?;
    let r = level_in(&lad, c)?;
    if r == lad.d {
        return Err(RecognitionError::LevelAtMinimum(r));
    }
    if c.is_star() {
        return Ok((0, r));
    }
    if c.has_3cycle() || c.loop_count() > 0 {
        if r % 2 != 0 {
            return Err(RecognitionError::InconsistentFamily(format!("3-cycle component at odd level {r}")));
        }
        return Ok((r / 2, r / 2));
    }
    let order = sorted_bipartite_at(f, &lad, r)?;
    let pos = order.iter().position(|&i| i == idx).expect("component is bipartite at level r");
    Ok((pos + 1, r - pos - 1))
}

/// Γ*_{1,b}(G) for b ≥ max(d, 2).
fn gamma_1b<'f>(f: &'f ComponentFamily, lad: &Ladder, b: usize) -> Result<&'f AnonComponent> {
    require_level(f, "a graph with a = 1", b + 1)?;
    let order = sorted_bipartite_at(f, lad, b + 1)?;
    order
        .first()
        .map(|&i| &f.components()[i])
        .ok_or_else(|| RecognitionError::InconsistentFamily(format!("no bipartite component at level {}", b + 1)))
}

/// |G| as the smaller part of Γ*_{1,d}(G).
pub fn recover_order(f: &ComponentFamily) -> Result<u64> {
    if is_trivial_family(f) {
        return Ok(1);
    }
    let cyc = recognize_cyclic(f)?;
    if cyc.is_cyclic {
        return Ok(cyc.order.unwrap());
    }
    let lad = ladder(f)?;
    let c = gamma_1b(f, &lad, lad.d)?;
    to_u64(c.parts().unwrap().0, "order")
}

/// P_G(s) from φ(t) = 0 for t < d and φ(d + i) = u_i.
pub fn recover_p(f: &ComponentFamily) -> Result<DirichletPolynomial> {
    if is_trivial_family(f) {
        return Ok(DirichletPolynomial::one(1));
    }
    let lad = ladder(f)?;
    let n = recover_order(f)?;
    let rows: Vec<(u32, BigInt)> = (0..lad.d)
        .map(|t| (t as u32, BigInt::from(0)))
        .chain(lad.stars.iter().enumerate().map(|(i, &u)| ((lad.d + i) as u32, BigInt::from(u))))
        .collect();
    solve_dirichlet(n, &rows)
}

/// Rank bound used for the Frattini graph: every subgroup of G is generated
/// by t elements, since a proper subgroup H has d(H) ≤ Ω(|H|) ≤ Ω(|G|) − 1.
pub fn frattini_rank(order: u64, d: usize) -> usize {
    (big_omega(order) as usize).saturating_sub(1).max(d).max(2)
}

/// |Frat(G)|: in Γ*_{1,t}(G), delete the t-tuples joined to every 1-tuple
/// and count the 1-tuples left isolated.
pub fn recover_frattini_order(f: &ComponentFamily) -> Result<u64> {
    if is_trivial_family(f) {
        return Ok(1);
    }
    let lad = ladder(f)?;
    let n = recover_order(f)?;
    let c = gamma_1b(f, &lad, frattini_rank(n, lad.d))?;
    to_u64(c.isolated_after_removing_universal().unwrap(), "Frattini order")
}

/// The degree test on the larger part of Γ*_{1,d}(G): each degree over |G|
/// must be a product of (1 − 1/p) over distinct primes.
pub(crate) fn degrees_are_distinct_prime_products(c: &AnonComponent, n: u64) -> bool {
    c.larger_side_degrees().unwrap().iter().all(|&(deg, _)| {
        let q = BigRational::new(BigInt::from(deg), BigInt::from(n));
        unfat_factor(&q).is_some_and(|ps| is_squarefree_multiset(&ps))
    })
}

/// Nilpotency: P must be ∏_p Q_{p,δ_p}, and the degree test must pass.
pub fn decide_nilpotent(f: &ComponentFamily) -> Result<bool> {
    if is_trivial_family(f) || recognize_cyclic(f)?.is_cyclic {
        return Ok(true);
    }
    if recover_p(f)?.q_factorisation().is_none() {
        return Ok(false);
    }
    let lad = ladder(f)?;
    let n = recover_order(f)?;
    Ok(degrees_are_distinct_prime_products(gamma_1b(f, &lad, lad.d)?, n))
}

/// Runs every recovery on a full family.
pub fn recover_all(f: &ComponentFamily) -> Result<Recovery> {
    require_full(f)?;
    if is_trivial_family(f) {
        return Ok(Recovery::trivial_group());
    }
    let cyc = recognize_cyclic(f)?;
    let kd = if cyc.is_cyclic { None } else { Some(recognize_klein_or_dihedral(f)?) };
    Ok(Recovery {
        trivial: false,
        cyclic: cyc.is_cyclic,
        klein_or_dihedral: kd,
        d: recover_d(f)?,
        order: recover_order(f)?,
        p: recover_p(f)?,
        frattini_order: recover_frattini_order(f)?,
        nilpotent: decide_nilpotent(f)?,
    })
}
