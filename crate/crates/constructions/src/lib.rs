//! Special groups and the invariants built on generating graphs: the
//! order-9216 diameter counterexample, a pair of non-isomorphic groups of
//! order 605 with the same components, crown-based powers, τ_d orbit
//! counts, the ≡_m relations, ψ(G) and non-zero spread.

pub mod counterexample;
pub mod crown;
pub mod dprod;
pub mod equiv;
pub mod error;
pub mod pair605;
pub mod tau;

pub use counterexample::{build_section3_counterexample, CounterexampleGroup, Section3};
pub use crown::crown_power;
pub use dprod::{check_direct_product_connectivity, ProductConnectivity};
pub use equiv::{
    equiv_gamma, equiv_m, equiv_m_r, has_nonzero_spread, is_efficiently_generated, isolated_one_tuples,
    isolated_one_tuples_by_graph, psi, EquivalenceReport,
};
pub use error::{ConstructionError, Result};
pub use pair605::{build_605_pair, Pair605};
pub use tau::{tau_d, TauReport};
