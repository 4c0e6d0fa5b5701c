//! Error type shared by the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// δ = 0: the catalecticant is singular, so no Gorenstein-linear resolution exists.
    #[error("inadmissible inverse system: {0}")]
    Inadmissible(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid basis element: {0}")]
    InvalidBasis(String),
    /// A structural invariant of a computed object failed.
    #[error("structure violated: {0}")]
    Structure(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
