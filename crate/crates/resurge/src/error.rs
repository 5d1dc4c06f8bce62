use std::fmt;

/// Error type shared by all modules.
///
/// The variants map onto the CLI exit codes: `Input` is a malformed or
/// semantically invalid ideal/query (exit 3), `Cap` is an exhausted resource
/// budget (exit 4) and `Internal` is a failed cross-check or a state the
/// library considers impossible (exit 5).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Input(String),
    Cap(String),
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Cap(msg) => write!(f, "resource cap exceeded: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn cap_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Cap(msg.into()))
}

pub(crate) fn internal_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
