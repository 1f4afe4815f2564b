use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("NON_REGULAR: {0}")]
    NonRegular(String),
    #[error("UNKNOWN_VECTOR: {0}")]
    UnknownVector(String),
    #[error("UNSUPPORTED_DIM: {0}")]
    UnsupportedDim(String),
    #[error("UNKNOWN_KIND: {0}")]
    UnknownKind(String),
    #[error("REGIME_OUT_OF_SCOPE: {0}")]
    RegimeOutOfScope(String),
}

impl Error {
    /// Exit status for command-line use: 2 for malformed input, 3 for
    /// requests outside the mathematically supported range.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Invalid(_) | Error::UnknownVector(_) | Error::UnknownKind(_) => 2,
            Error::NonRegular(_) | Error::UnsupportedDim(_) | Error::RegimeOutOfScope(_) => 3,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "PARSE",
            Error::Invalid(_) => "INVALID",
            Error::NonRegular(_) => "NON_REGULAR",
            Error::UnknownVector(_) => "UNKNOWN_VECTOR",
            Error::UnsupportedDim(_) => "UNSUPPORTED_DIM",
            Error::UnknownKind(_) => "UNKNOWN_KIND",
            Error::RegimeOutOfScope(_) => "REGIME_OUT_OF_SCOPE",
        }
    }
}
