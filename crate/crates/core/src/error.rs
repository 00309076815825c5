use std::io;

use thiserror::Error;

/// Errors produced by the library and the experiment runner.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad configuration: unknown distribution or kernel name, invalid size, malformed config line.
    #[error("configuration error: {0}")]
    Config(String),

    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Root bracketing or iteration failures.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A computed quantity exceeded its declared tolerance.
    #[error("tolerance breach: {0}")]
    Tolerance(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] io::Error),

    /// Failure inside an experiment, tagged with where it happened.
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    /// Process exit code: 1 usage/input, 2 numeric failure, 3 tolerance breach.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Parse { .. } | Error::Io(_) => 1,
            Error::Domain(_) | Error::Numeric(_) => 2,
            Error::Tolerance(_) => 3,
            Error::Context { source, .. } => source.exit_code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
