use thiserror::Error;

/// Errors raised by the engine. Every variant corresponds to a caller
/// mistake or an unsupported request; internal inconsistencies panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input values: non-decreasing partitions, length mismatches, ...
    #[error("invalid input: {0}")]
    Input(String),

    /// Well-formed input that violates an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The twist parameter is below the bound needed for the embedding.
    #[error("embedding bound violated: m = {given} but m must be at least {minimal}")]
    EmbeddingBound { given: i64, minimal: i64 },

    /// A request that the two-Grassmannian model cannot represent.
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
