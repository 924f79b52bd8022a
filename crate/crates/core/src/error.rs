use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    NonMonotonePartition(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    PartitionParse(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("basis element of degree 0 is the unit; request it explicitly")]
    ZeroDegreeBasis,
    #[error("set map value {value} out of range for target of size {target}")]
    SetMapRange { value: usize, target: usize },
    #[error("map of pointed sets is not active: {0}")]
    NonActiveMap(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("block shape mismatch: {0}")]
    BlockShapeMismatch(String),
    #[error("degree overflow: degree {degree} exceeds truncation bound {bound}")]
    DegreeOverflow { degree: u32, bound: u32 },
    #[error("invalid character table: {0}")]
    InvalidCharacterTable(String),
    #[error("malformed cube: {0}")]
    MalformedCube(String),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
