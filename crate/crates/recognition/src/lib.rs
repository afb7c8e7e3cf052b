//! Recovering invariants of a finite group from the unlabelled components
//! of its generating graphs.

pub mod error;
pub mod family;
pub mod lstt;
pub mod recover;
pub mod solve;
pub mod unfat;

pub use error::{RecognitionError, Result};
pub use family::{lambda1_star, lambda_star, AnonComponent, ComponentFamily, FamilyKind};
pub use lstt::lstt_pipeline;
pub use recover::{
    component_level, decide_nilpotent, recognize_cyclic, recognize_klein_or_dihedral, recover_ab, recover_all,
    recover_d, recover_frattini_order, recover_order, recover_p, CyclicVerdict, KleinDihedralVerdict, Recovery,
};
pub use solve::solve_dirichlet;
pub use unfat::{is_squarefree_multiset, unfat_factor};
