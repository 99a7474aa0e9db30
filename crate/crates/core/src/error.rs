use alloc::string::String;

/// Errors raised by the computational kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("truncation bound violated: {0}")]
    BoundViolation(String),
    #[error("grammar has a unit/epsilon derivation cycle through `{0}`; counting diverges")]
    Divergent(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("singular linear system")]
    Singular,
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    #[error("no univariate relation found for `{0}`")]
    NoUnivariate(String),
    #[error("no power-series root matches the seed: {0}")]
    RootMismatch(String),
    #[error("root is not simple and could not be separated: {0}")]
    NonSimpleRoot(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// A mathematical check failed.
    Mathematical,
    /// The input is malformed or violates a precondition.
    Input,
    /// A configured resource cap was hit.
    Resource,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Invalid(_) | Error::BoundViolation(_) | Error::Divergent(_) => ErrorKind::Input,
            Error::ResourceCap(_) => ErrorKind::Resource,
            Error::Singular
            | Error::ZeroConstantTerm
            | Error::NoUnivariate(_)
            | Error::RootMismatch(_)
            | Error::NonSimpleRoot(_)
            | Error::Mismatch(_) => ErrorKind::Mathematical,
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
