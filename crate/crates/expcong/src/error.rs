//! Error type shared by all modules.

use std::fmt;

/// Errors raised by the library. The CLI maps `Domain` and `NotAUnit` to
/// exit code 2 and `ResourceCap` to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain (bad modulus, bad
    /// exponent, composite where a prime is required, ...).
    Domain(String),
    /// The residue must be invertible modulo the modulus and is not.
    NotAUnit { value: u64, modulus: u64 },
    /// An enumeration was requested above the configured cap.
    ResourceCap { requested: u64, cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NotAUnit { value, modulus } => {
                write!(f, "{value} is not a unit modulo {modulus}")
            }
            Error::ResourceCap { requested, cap } => {
                write!(
                    f,
                    "enumeration over {requested} exceeds the cap {cap}; raise it with --max-n or EXPCONG_MAX_N"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Error {
        Error::Domain(msg.into())
    }
}
