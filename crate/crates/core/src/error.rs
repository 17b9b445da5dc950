use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("period mismatch: {left} vs {right}")]
    PeriodMismatch { left: usize, right: usize },

    #[error("enumeration cap exceeded: length {length} > cap {cap}")]
    CapExceeded { length: usize, cap: usize },

    #[error("b-file line {line}: {reason}")]
    MalformedBFile { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
