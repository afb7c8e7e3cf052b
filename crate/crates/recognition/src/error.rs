use gg_core::GroupError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("truncation level {have} is too low: {what} needs at least {needed}")]
    InsufficientTruncation { what: &'static str, needed: usize, have: usize },
    #[error("component level equals d(G) = {0}; its (a, b) label is not determined")]
    LevelAtMinimum(usize),
    #[error("linear system for the coefficients of P is singular")]
    SingularSystem,
    #[error("family is not of the expected kind: {0}")]
    WrongKind(&'static str),
    #[error("inconsistent family: {0}")]
    InconsistentFamily(String),
    #[error("no component with index {0}")]
    NoSuchComponent(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub type Result<T> = std::result::Result<T, RecognitionError>;
