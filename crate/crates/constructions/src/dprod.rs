//! Connectivity of Γ*_{a,b} for direct products of non-abelian simple groups.

use crate::error::{ConstructionError, Result};
use gg_core::generation::min_generators;
use gg_core::products::direct_product;
use gg_core::structure::is_simple;
use gg_core::{Caps, FiniteGroup};
use gg_graphs::build_gamma;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductConnectivity {
    pub order: usize,
    pub d: usize,
    pub a: usize,
    pub b: usize,
    pub vertices: u64,
    pub components: usize,
    pub connected: bool,
}

/// Builds ∏ S_i^{k_i} and Γ*_{a,b} of it, and counts components.
pub fn check_direct_product_connectivity(
    factors: &[(FiniteGroup, usize)],
    a: usize,
    b: usize,
    caps: &Caps,
) -> Result<ProductConnectivity> {
    let mut g: Option<FiniteGroup> = None;
    for (s, k) in factors {
        if s.is_abelian() || !is_simple(s) {
            return Err(ConstructionError::NotSimple);
        }
        for _ in 0..*k {
            gg_core::error::cap_check(
                "order of the direct product",
                (g.as_ref().map_or(1, |g| g.order()) * s.order()) as u128,
                caps.max_vertices as u128,
            )?;
            g = Some(match g {
                None => s.clone(),
                Some(h) => direct_product(&h, s),
            });
        }
    }
    let g = g.ok_or_else(|| gg_core::GroupError::ParameterOutOfRange("no factors".into()))?;
    let gg = build_gamma(&g, a.min(b), a.max(b), caps)?.prune_isolated();
    let components = gg.pruned_component_count();
    Ok(ProductConnectivity {
        order: g.order(),
        d: min_generators(&g),
        a,
        b,
        vertices: gg.vertex_count(),
        components,
        connected: components == 1,
    })
}
