use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("degree {0} is outside the supported range 1..=65535")]
    BadDegree(usize),

    #[error("cannot parse permutation {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("unknown group name {0:?}")]
    UnknownName(String),

    #[error("bad parameter for {name}: {reason}")]
    BadParam { name: String, reason: String },

    #[error("embedded data failed validation: {0}")]
    ValidationFailed(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not contained in the required overgroup")]
    NotContained,

    #[error("element set is not closed under multiplication")]
    NotASubgroup,

    #[error("element does not lie in the parent group")]
    NotInParent,

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),

    #[error("unknown probe kind {0:?}")]
    UnknownKind(String),

    #[error("internal disagreement between independent computations: {0}")]
    InternalDisagreement(String),

    #[error("i/o error on {path}: {reason}")]
    Io { path: String, reason: String },
}

impl Error {
    pub(crate) fn parse(text: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            text: text.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn bad_param(name: &str, reason: impl Into<String>) -> Self {
        Error::BadParam {
            name: name.to_string(),
            reason: reason.into(),
        }
    }

    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap(_))
    }
}
