use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("an itemset must contain at least one item")]
    EmptyItemset,

    #[error("itemset has {found} items but the store holds {expected}-itemsets")]
    LevelMismatch { expected: usize, found: usize },

    #[error("malformed level: {0}")]
    InvalidLevel(String),

    #[error("malformed prefixed store: {0}")]
    InvalidStore(String),

    #[error("invalid support threshold: {0}")]
    InvalidThreshold(String),

    #[error("item universe has {items} items; brute force mining is limited to {limit}")]
    UniverseTooLarge { items: usize, limit: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("invalid synthetic spec: {0}")]
    Spec(String),

    #[error("unknown item label {0:?}")]
    UnknownLabel(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
