use thiserror::Error;

use crate::semigroup::FarkasCertificate;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("`{0}` is not an edge of the graph")]
    UnknownEdge(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),

    #[error("not an exceptional pair: {0}")]
    NotExceptional(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("move source not contained in word; missing: {0}")]
    SourceAbsent(String),

    #[error("element is not in the normalized semigroup")]
    NotMember(Box<FarkasCertificate>),

    #[error("{0} exceeds the enumeration cap of {1}")]
    CapExceeded(String, usize),

    #[error("internal invariant failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
