use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure kinds shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input graph or vertex set violates a precondition.
    Input(String),
    /// A numeric parameter (k, p, t, c, ...) is outside the supported range.
    Parameter(String),
    /// A configured work limit was exceeded before an answer was reached.
    Resource(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// Short machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Parameter(_) => "parameter",
            Error::Resource(_) => "resource",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Error::Input(m) | Error::Parameter(m) | Error::Resource(m) => m,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error: {}", self.kind(), self.message())
    }
}

impl core::error::Error for Error {}
