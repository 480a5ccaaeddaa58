use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("subgroup count exceeds the configured cap of {cap}")]
    SubgroupCapExceeded { cap: usize },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("not a subgroup of the given group")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("unrealizable construction: {0}")]
    Unrealizable(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("non-integral formula value: {0}")]
    NonIntegral(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate group name `{0}`")]
    DuplicateName(String),

    #[error("unresolved group reference `{0}`")]
    UnresolvedReference(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
