use thiserror::Error;

/// Errors from parsing or validating knot input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("T({p},{q}) is not a knot: gcd(p, q) must be 1")]
    NotAKnot { p: u32, q: u32 },
    #[error("{0}")]
    Semantic(String),
    #[error("malformed PD code: {0}")]
    MalformedPd(String),
    #[error("PD code describes more than one component")]
    MultiComponentPd,
    #[error("PD code has inconsistent orientation at crossing {0}")]
    InconsistentOrientation(usize),
}

/// Errors from the algebraic pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error("presentation is not a knot group: {0}")]
    NotAKnotGroup(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("cover degree must be at least 1, got {0}")]
    BadDegree(i64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
