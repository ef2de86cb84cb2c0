use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("column index {index} out of bounds for {columns} columns")]
    ColumnOutOfBounds { index: usize, columns: usize },

    #[error("invalid k = {k}: must satisfy 1 <= k <= n = {n}")]
    InvalidK { k: usize, n: usize },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("invalid dataset: {0}")]
    InvalidDataset(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{}:{line}: {message}", source_name.display())]
    Parse {
        source_name: PathBuf,
        line: usize,
        message: String,
    },

    #[error("unknown blood group {0:?}")]
    UnknownBloodGroup(String),

    #[error("unknown location {0:?}")]
    UnknownLocation(String),

    #[error("duplicate donor_id {0:?}")]
    DuplicateDonor(String),

    #[error("invalid donor record: {0}")]
    InvalidDonor(String),

    /// A record-level failure at a known line of an input file.
    #[error("{}:{line}: {source}", source_name.display())]
    Record {
        source_name: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            source_name: PathBuf::from("<input>"),
            line,
            message: message.into(),
        }
    }

    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::Record {
            source_name: PathBuf::from("<input>"),
            line,
            source: Box::new(self),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// The underlying error of a [`Error::Record`], or `self`.
    pub fn root(&self) -> &Error {
        match self {
            Error::Record { source, .. } => source.root(),
            other => other,
        }
    }

    /// Replaces the placeholder source name of a parse error with the real file path.
    pub fn with_source_name(self, name: impl Into<PathBuf>) -> Self {
        match self {
            Error::Parse { line, message, .. } => Error::Parse {
                source_name: name.into(),
                line,
                message,
            },
            Error::Record { line, source, .. } => Error::Record {
                source_name: name.into(),
                line,
                source,
            },
            other => other,
        }
    }
}
