/// Size guards shared by every expensive computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order for which the full subgroup lattice is built.
    pub max_lattice: usize,
    /// Largest vertex count of an explicitly materialised graph, and largest
    /// tuple space `|G|^t` scanned by enumeration.
    pub max_vertices: u64,
    /// Largest order for which imported tables are checked for associativity.
    pub assoc_check_max: usize,
    /// When set, associativity is checked regardless of `assoc_check_max`.
    pub strict: bool,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_lattice: 2000, max_vertices: 10_000_000, assoc_check_max: 256, strict: false }
    }
}
