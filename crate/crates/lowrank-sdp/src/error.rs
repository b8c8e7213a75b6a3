//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by parsing, validation, fetching and pipeline stages.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed instance or solution text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Shapes or lengths do not line up.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix expected to be symmetric is not.
    #[error("matrix is not symmetric (max asymmetry {max_asymmetry:.3e})")]
    NotSymmetric { max_asymmetry: f64 },

    /// An argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A value or matrix failed a documented validation check.
    #[error("validation failed: {0}")]
    Validation(String),

    /// The remote server answered with a non-success status.
    #[error("instance '{name}' not found at {url} (HTTP status {status})")]
    NotFound { name: String, url: String, status: u16 },

    /// The request never produced an HTTP response.
    #[error("network failure fetching {url}: {source}")]
    Network {
        url: String,
        #[source]
        source: reqwest::Error,
    },

    /// The fetched bytes could not be stored in the cache.
    #[error("cache write failed at {path}: {source}")]
    CacheWrite {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Generic I/O failure (reading instance or solution files).
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// A pipeline stage failed; wraps the underlying error with the stage name.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps an error with the pipeline stage it occurred in.
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
