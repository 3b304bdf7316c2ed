use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("universe has {size} elements; at most {capacity} are supported")]
    UniverseCapacity { size: usize, capacity: usize },

    #[error("duplicate element name {0:?}")]
    DuplicateElement(String),

    #[error("duplicate parameter name {0:?}")]
    DuplicateParameter(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),

    #[error("operands are defined over different universes")]
    UniverseMismatch,

    #[error("exhaustive sweep over {size} elements exceeds the limit of {limit} (set SOFTROUGH_MAX_EXHAUSTIVE to raise it)")]
    UniverseTooLarge { size: usize, limit: usize },

    #[error("not a covering soft set: {0}")]
    NotACovering(String),

    #[error("soft set is not a partition of the universe")]
    NotAPartition,

    #[error("family is not a topology: {0}")]
    NotATopology(String),

    #[error("unknown property {0:?}")]
    UnknownProperty(String),

    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{field}: {message}")]
    Validation { field: String, message: String },

    #[error("{0}")]
    Io(String),
}
