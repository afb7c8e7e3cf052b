use thiserror::Error;

/// Errors raised while building or interrogating groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {reason} (witness {witness:?})")]
    NotAGroup { reason: String, witness: Vec<usize> },
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("action is not a homomorphism into Aut(N): {0}")]
    ActionNotHomomorphism(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    OrderCapExceeded { what: &'static str, value: u128, cap: u128 },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("the quotient tuple does not generate G/N")]
    QuotientTupleNotGenerating,
    #[error("d = {d} is smaller than d(G) = {min}")]
    DTooSmall { d: usize, min: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("no factorisation of the prime-power part into (1 - c/q^s) factors: {0}")]
    NoProductForm(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;

pub fn cap_check(what: &'static str, value: u128, cap: u128) -> Result<()> {
    if value > cap {
        Err(GroupError::OrderCapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
