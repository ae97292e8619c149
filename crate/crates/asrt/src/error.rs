use std::fmt;
use std::io;

/// Errors produced by the library and mapped to exit codes by the CLI.
#[derive(Debug)]
pub enum Error {
    /// A construction parameter is unusable (e.g. sieve limit below 2,
    /// or a sieve too small for the requested table).
    Usage(String),
    /// An argument falls outside the range covered by a sieve or table.
    Range(String),
    /// The operation is undefined at this input (e.g. T* at n = 0,
    /// the composite bound at a prime).
    Domain(String),
    /// An enumeration or expansion would exceed its configured cap.
    Capacity(String),
    /// A cache or export file is malformed.
    Format(String),
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Range(msg) => write!(f, "range error: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Capacity(msg) => write!(f, "capacity error: {msg}"),
            Error::Format(msg) => write!(f, "format error: {msg}"),
            Error::Io(err) => write!(f, "io error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(err: io::Error) -> Self {
        Error::Io(err)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
