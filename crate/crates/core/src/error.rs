use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    /// An integer parameter is outside the supported range.
    #[error("range error: {0}")]
    Range(String),

    #[error("invalid evaluation options: {0}")]
    Options(String),

    #[error("mixed determinants: expected {expected}, found {found}")]
    MixedDeterminant { expected: i64, found: i64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A structural property of a matrix set failed to hold.
    #[error("structural error: {0}")]
    Structure(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid grid: {0}")]
    Grid(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
