//! Anonymised component families Λ*(G) and Λ₁*(G).
//!
//! An [`AnonComponent`] keeps only an unlabelled graph (as a twin-reduced
//! weighted quotient) and statistics derived from it. Nothing about the
//! tuples or subgroups that produced it survives construction.

use crate::error::{RecognitionError, Result};
use gg_core::{subgroup_lattice, Caps, FiniteGroup};
use gg_graphs::lattice_gamma::gamma_components;
use gg_graphs::WeightedQuotient;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnonComponent {
    quotient: WeightedQuotient,
    /// Node colouring into the two parts, smaller part first, when bipartite.
    sides: Option<Vec<u8>>,
    vertices: u128,
    edges: u128,
    loops: u128,
    has_3cycle: bool,
    parts: Option<(u128, u128)>,
    degrees: BTreeMap<u128, u128>,
    certificate: Vec<u64>,
}

impl AnonComponent {
    /// Forgets everything but the graph. The input must be connected.
    pub fn from_weighted_quotient(q: &WeightedQuotient) -> Self {
        let quotient = q.twin_reduced();
        let sides = quotient.node_colouring().map(|mut col| {
            let w0: u128 = (0..quotient.len()).filter(|&i| col[i] == 0).map(|i| quotient.weight[i]).sum();
            let w1 = quotient.vertex_count() - w0;
            if w1 < w0 {
                col.iter_mut().for_each(|c| *c = 1 - *c);
            }
            col
        });
        AnonComponent {
            vertices: quotient.vertex_count(),
            edges: quotient.edge_count(),
            loops: quotient.loop_count(),
            has_3cycle: quotient.has_3cycle(),
            parts: quotient.bipartition_sizes(),
            degrees: quotient.degree_counts(),
            certificate: quotient.certificate(),
            sides,
            quotient,
        }
    }

    pub fn from_explicit(g: &gg_graphs::SimpleGraph) -> Self {
        Self::from_weighted_quotient(&WeightedQuotient::from_explicit(g))
    }

    pub fn quotient(&self) -> &WeightedQuotient {
        &self.quotient
    }

    pub fn vertex_count(&self) -> u128 {
        self.vertices
    }

    pub fn edge_count(&self) -> u128 {
        self.edges
    }

    pub fn loop_count(&self) -> u128 {
        self.loops
    }

    pub fn has_3cycle(&self) -> bool {
        self.has_3cycle
    }

    /// ν: 2e + l with a 3-cycle, e otherwise.
    pub fn nu(&self) -> u128 {
        if self.has_3cycle {
            2 * self.edges + self.loops
        } else {
            self.edges
        }
    }

    /// 2e + l, the number of ordered adjacent pairs counted once per loop.
    pub fn two_e_plus_l(&self) -> u128 {
        2 * self.edges + self.loops
    }

    pub fn is_bipartite(&self) -> bool {
        self.parts.is_some()
    }

    /// `(smaller, larger)` part sizes.
    pub fn parts(&self) -> Option<(u128, u128)> {
        self.parts
    }

    /// K_{1,m}: bipartite with a one-vertex part.
    pub fn is_star(&self) -> bool {
        matches!(self.parts, Some((1, _)))
    }

    pub fn star_leaves(&self) -> Option<u128> {
        self.is_star().then(|| self.parts.unwrap().1)
    }

    pub fn has_degree_one(&self) -> bool {
        self.degrees.contains_key(&1)
    }

    pub fn degree_counts(&self) -> &BTreeMap<u128, u128> {
        &self.degrees
    }

    pub fn certificate(&self) -> &[u64] {
        &self.certificate
    }

    pub fn is_k2(&self) -> bool {
        self.vertices == 2 && self.edges == 1 && self.loops == 0
    }

    pub fn is_looped_point(&self) -> bool {
        self.vertices == 1 && self.loops == 1
    }

    pub fn is_k3(&self) -> bool {
        self.vertices == 3 && self.edges == 3 && self.loops == 0
    }

    /// Some loop-free vertex adjacent to every other vertex.
    pub fn has_loopless_universal_vertex(&self) -> bool {
        let q = &self.quotient;
        (0..q.len()).any(|i| !q.clique[i] && q.weight[i] == 1 && q.rows[i].len() == q.len() - 1)
    }

    /// Degrees of the nodes in the larger part, with multiplicity as weights.
    pub fn larger_side_degrees(&self) -> Option<Vec<(u128, u128)>> {
        let sides = self.sides.as_ref()?;
        let q = &self.quotient;
        Some((0..q.len()).filter(|&i| sides[i] == 1).map(|i| (q.degree(i), q.weight[i])).collect())
    }

    /// Some larger-part vertex is adjacent to the whole smaller part.
    pub fn has_vertex_joined_to_smaller_part(&self) -> bool {
        let Some(sides) = self.sides.as_ref() else { return false };
        let q = &self.quotient;
        let small = sides.iter().filter(|&&s| s == 0).count();
        (0..q.len()).any(|j| sides[j] == 1 && q.rows[j].len() == small)
    }

    /// Deletes the larger-part vertices adjacent to the whole smaller part and
    /// returns the number of smaller-part vertices left isolated.
    pub fn isolated_after_removing_universal(&self) -> Option<u128> {
        let sides = self.sides.as_ref()?;
        let q = &self.quotient;
        let small: Vec<usize> = (0..q.len()).filter(|&i| sides[i] == 0).collect();
        let removed: Vec<bool> = (0..q.len()).map(|j| sides[j] == 1 && q.rows[j].len() == small.len()).collect();
        Some(
            small
                .iter()
                .filter(|&&i| q.rows[i].iter().all(|&j| removed[j as usize]))
                .map(|&i| q.weight[i])
                .sum(),
        )
    }

    fn order_key(&self, other: &Self) -> Ordering {
        (self.vertices, self.edges, &self.degrees, &self.certificate).cmp(&(
            other.vertices,
            other.edges,
            &other.degrees,
            &other.certificate,
        ))
    }

    pub fn to_json(&self) -> Value {
        let q = &self.quotient;
        json!({
            "weight": q.weight.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "loop": q.clique,
            "rows": q.rows,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| RecognitionError::InconsistentFamily(format!("component JSON: {m}"));
        let weight = v["weight"]
            .as_array()
            .ok_or_else(|| bad("missing weight"))?
            .iter()
            .map(|w| w.as_str().and_then(|s| s.parse::<u128>().ok()).ok_or_else(|| bad("weight")))
            .collect::<Result<Vec<u128>>>()?;
        let clique: Vec<bool> = serde_json::from_value(v["loop"].clone()).map_err(|_| bad("loop"))?;
        let rows: Vec<Vec<u32>> = serde_json::from_value(v["rows"].clone()).map_err(|_| bad("rows"))?;
        if clique.len() != weight.len() || rows.len() != weight.len() {
            return Err(bad("length mismatch"));
        }
        let n = weight.len() as u32;
        for (i, r) in rows.iter().enumerate() {
            if r.iter().any(|&j| j >= n) || r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad("rows must be sorted node indices"));
            }
            if r.binary_search(&(i as u32)).is_ok() != clique[i] {
                return Err(bad("a looped node must list itself"));
            }
            for &j in r {
                if rows[j as usize].binary_search(&(i as u32)).is_err() {
                    return Err(bad("rows are not symmetric"));
                }
            }
        }
        Ok(Self::from_weighted_quotient(&WeightedQuotient { weight, clique, rows }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// Components of every Γ*_{a,b}(G) with a + b up to the truncation.
    Full,
    /// Components of Γ*_{1,t}(G) only.
    A1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentFamily {
    pub kind: FamilyKind,
    /// Largest a + b included.
    pub truncation_level: usize,
    components: Vec<AnonComponent>,
}

impl ComponentFamily {
    /// Sorts the components into the canonical order.
    pub fn new(kind: FamilyKind, truncation_level: usize, mut components: Vec<AnonComponent>) -> Self {
        components.sort_by(|x, y| x.order_key(y));
        ComponentFamily { kind, truncation_level, components }
    }

    pub fn components(&self) -> &[AnonComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The sorted certificate multiset; equal for isomorphic families.
    pub fn certificates(&self) -> Vec<&[u64]> {
        self.components.iter().map(|c| c.certificate()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "truncation_level": self.truncation_level,
            "components": self.components.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let kind: FamilyKind = serde_json::from_value(v["kind"].clone())
            .map_err(|_| RecognitionError::InconsistentFamily("family JSON: kind".into()))?;
        let level = v["truncation_level"]
            .as_u64()
            .ok_or_else(|| RecognitionError::InconsistentFamily("family JSON: truncation_level".into()))?;
        let comps = v["components"]
            .as_array()
            .ok_or_else(|| RecognitionError::InconsistentFamily("family JSON: components".into()))?
            .iter()
            .map(AnonComponent::from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(kind, level as usize, comps))
    }
}

fn collect(g: &FiniteGroup, pairs: Vec<(usize, usize)>, caps: &Caps) -> Result<Vec<AnonComponent>> {
    let lat = subgroup_lattice(g, caps)?;
    let parts: Vec<Vec<AnonComponent>> = pairs
        .into_par_iter()
        .map(|(a, b)| {
            gamma_components(&lat, a, b).map(|qs| qs.iter().map(AnonComponent::from_weighted_quotient).collect())
        })
        .collect::<std::result::Result<_, _>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// Λ*(G) truncated at a + b ≤ `max_level`.
pub fn lambda_star(g: &FiniteGroup, max_level: usize, caps: &Caps) -> Result<ComponentFamily> {
    let pairs = (1..=max_level).flat_map(|r| (0..=r / 2).map(move |a| (a, r - a))).collect();
    Ok(ComponentFamily::new(FamilyKind::Full, max_level, collect(g, pairs, caps)?))
}

/// Λ₁*(G): components of Γ*_{1,t}(G) for 0 ≤ t ≤ `max_t`.
pub fn lambda1_star(g: &FiniteGroup, max_t: usize, caps: &Caps) -> Result<ComponentFamily> {
    let pairs = (0..=max_t).map(|t| (t.min(1), t.max(1))).collect();
    Ok(ComponentFamily::new(FamilyKind::A1, max_t + 1, collect(g, pairs, caps)?))
}
