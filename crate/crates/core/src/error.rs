use thiserror::Error;

/// Crate-wide error type.
///
/// The variants map onto the CLI exit codes: input errors exit 2, capacity
/// errors exit 3, fixture integrity errors exit 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("capacity error: closure exceeded cap of {cap} elements")]
    Capacity { cap: usize },

    #[error("fixture integrity error: {0}")]
    Integrity(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
