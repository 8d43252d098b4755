use thiserror::Error;

/// Crate-wide error type. Caps and budgets abort with an error rather than
/// silently truncating; truncation that is part of a result (e.g. capped
/// enumeration) is reported through flags on the result instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cycle notation parse error: {0}")]
    CycleParse(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("element cap {cap} exceeded while building group of order {needed}")]
    ElementCap { cap: usize, needed: usize },

    #[error("element cap {cap} exceeded during closure")]
    ClosureCap { cap: usize },

    #[error("graph cap {cap} exceeded: construction needs {requested} vertices")]
    GraphCap { cap: usize, requested: usize },

    #[error("action is not transitive ({context})")]
    NotTransitive { context: String },

    #[error("induced action on {k}-subsets of {degree} points is not faithful")]
    NotFaithful { degree: usize, k: usize },

    #[error("budget of {budget} nodes exhausted ({context})")]
    Budget { budget: u64, context: String },

    #[error("invalid request: {0}")]
    Spec(String),

    #[error("graph format error: {0}")]
    GraphFormat(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
