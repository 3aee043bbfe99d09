use alloc::string::String;
use core::fmt;

/// Errors surfaced by kernel construction, eigensolves, and samplers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A sampler or constructor was called with parameters outside its domain.
    InvalidParameter(String),
    /// An operation received an input object it cannot work on
    /// (non-symmetric matrix, disconnected component, mismatched sizes).
    InvalidInput(String),
    /// A documented size cap was exceeded.
    Capacity(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Capacity(msg) => write!(f, "capacity exceeded: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
