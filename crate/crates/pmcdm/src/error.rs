//! Crate-wide error type with machine-parsable codes.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid data: {0}")]
    Data(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("problem size exceeds cap: {0}")]
    Size(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("version mismatch: file has {found}, this build reads {expected}")]
    Version { found: String, expected: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Short machine-parsable code, stable across releases.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "DIM",
            Error::Data(_) => "DATA",
            Error::Parameter(_) => "PARAM",
            Error::Numeric(_) => "NUMERIC",
            Error::Size(_) => "SIZE",
            Error::Format(_) => "FORMAT",
            Error::Version { .. } => "VERSION",
            Error::Io { .. } => "IO",
        }
    }

    /// Process exit code: 2 for input/validation problems, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Numeric(_) => 3,
            _ => 2,
        }
    }
}
