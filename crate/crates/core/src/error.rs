use thiserror::Error;

/// Errors produced by graph construction, routing, analysis, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate point at index {0} and {1}")]
    DuplicatePoint(usize, usize),

    #[error("vertex id {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),

    #[error("unsupported cone count k = {0}: {1}")]
    UnsupportedK(usize, &'static str),

    #[error("routing did not reach the target within {0} steps")]
    StepLimitExceeded(usize),

    #[error("malformed point file at line {line}: {msg}")]
    PointParse { line: usize, msg: String },

    #[error("malformed JSON document: {0}")]
    Json(String),

    #[error("instance needs at least {0} points, got {1}")]
    TooFewPoints(usize, usize),

    #[error(
        "epsilon must satisfy 0 < epsilon <= {max}, got {got}",
        max = crate::instances::LOWER_BOUND_MAX_EPSILON
    )]
    BadEpsilon { got: String },

    #[error("source and target must be distinct vertices")]
    SourceEqualsTarget,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
