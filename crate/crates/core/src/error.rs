use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed `R`/`B` text or an empty color sequence.
    #[error("encoding error: {0}")]
    Encoding(String),

    /// A precondition of an operation does not hold.
    #[error("contract violated: {0}")]
    Contract(String),

    /// The requested run is too large for the chosen mode.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A player tried to look at their own hat.
    #[error("player {0} cannot see their own hat")]
    Peek(usize),
}

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
