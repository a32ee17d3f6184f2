use thiserror::Error;

/// Error type shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain: {0}")]
    Domain(String),

    /// Input data failed a structural check (ordering, coverage, size).
    #[error("validation: {0}")]
    Validation(String),

    /// A text payload could not be parsed.
    #[error("format: line {line}: {message}")]
    Format { line: usize, message: String },

    /// An I/O operation failed; the message names the path involved.
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
