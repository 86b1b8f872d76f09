use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A point with a vanishing coordinate where the operation needs all x_k ≠ 0.
    #[error("degenerate point: {0}")]
    DegeneratePoint(String),

    /// Linear system singular or too ill-conditioned to trust.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("invalid semiaxes: {0}")]
    Semiaxes(String),

    /// Parameters violate a kind-specific precondition.
    #[error("inadmissible parameters: {0}")]
    Admissibility(String),

    #[error("index out of window: {0}")]
    Range(String),

    #[error("point absent: {0}")]
    Absent(String),

    #[error("solver failed: {0}")]
    Solver(String),

    #[error("corrupted factor table: {0}")]
    Corrupted(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("format: {0}")]
    Format(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
