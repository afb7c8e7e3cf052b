use gg_core::GroupError;
use gg_recognition::RecognitionError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("the given subgroup is not the unique minimal normal subgroup of L")]
    NotUniqueMinimalNormal,
    #[error("group is not non-abelian simple")]
    NotSimple,
    #[error("the relations did not stabilise by r = {searched} (d(G) = {d})")]
    PsiSearchExceeded { d: usize, searched: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
}

pub type Result<T> = std::result::Result<T, ConstructionError>;
