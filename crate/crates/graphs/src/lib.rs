//! Generation graphs Γ_{a,b}(G), swap graphs Σ_d(G), and the weighted
//! quotient representation used to analyse them.

pub mod canon;
pub mod export;
pub mod gengraph;
pub mod lattice_gamma;
pub mod lemmas;
pub mod quotient;
pub mod simple;
pub mod swap;

pub use gengraph::{build_gamma, build_gamma_with, ComponentSummary, GenGraph};
pub use quotient::WeightedQuotient;
pub use simple::SimpleGraph;
pub use swap::{build_swap, SwapGraph};
