use cherednik_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group not found: {0}")]
    GroupNotFound(String),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("character table: {0}")]
    CharacterTable(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("element is not central")]
    NotCentral,
    #[error("polynomial is not invariant: {0}")]
    NotInvariant(String),
    #[error("{0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl Error {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::GroupNotFound(_) => "group not found",
            Error::InvalidGroup(_) => "invalid group",
            Error::CharacterTable(_) => "character table",
            Error::Parameter(_) => "invalid parameter",
            Error::NotCentral => "not central",
            Error::NotInvariant(_) => "not invariant",
            Error::Domain(_) => "domain error",
            Error::ResourceLimit(_) => "resource limit",
            Error::Exact(ExactError::ResourceLimit(_)) => "resource limit",
            Error::Exact(_) => "arithmetic error",
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit(_) | Error::Exact(ExactError::ResourceLimit(_))
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
