//! Finite groups given by Cayley tables, their subgroup lattices and the
//! generation invariants built on them.

pub mod arith;
pub mod builtins;
pub mod config;
pub mod dirichlet;
pub mod error;
pub mod generation;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod products;
pub mod structure;
pub mod subgroup;

pub use builtins::group_builtin;
pub use config::Caps;
pub use dirichlet::DirichletPolynomial;
pub use error::{GroupError, Result};
pub use group::FiniteGroup;
pub use lattice::{subgroup_lattice, SubgroupLattice};
pub use subgroup::{ClosureCache, SubId, Subgroup};
