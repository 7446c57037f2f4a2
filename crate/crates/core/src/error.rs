use std::time::Duration;

use crate::graph::TimeWindow;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("window exceeds lifetime: delta {delta} with {layers} layers")]
    WindowExceedsLifetime { delta: usize, layers: usize },

    #[error("invalid window [{a}, {b}] for {layers} layers")]
    InvalidWindow { a: usize, b: usize, layers: usize },

    #[error("window {0} is already at lifetime end")]
    AtLifetimeEnd(TimeWindow),

    #[error("vertex {0} is not in the given set")]
    VertexNotInSet(u32),

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("not a clique in window {0}")]
    NotACliqueInWindow(TimeWindow),

    #[error("invalid isolation parameter {0:?}: expected a positive decimal or fraction")]
    InvalidParam(String),

    #[error("unknown isolation kind {0:?}")]
    UnknownKind(String),

    #[error(
        "usually-max is unsupported by fast enumerator: it is the open case with no known \
         bounded isolated-subset search; use oracle"
    )]
    UnsupportedKind,

    #[error("instance too large for oracle: {0}")]
    OracleTooLarge(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty input: no contact records")]
    EmptyInput,

    #[error("time limit exceeded after {0:?}")]
    TimeLimitExceeded(Duration),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
