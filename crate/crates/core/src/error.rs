//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("stepping a terminated episode")]
    EpisodeTerminated,

    #[error("non-monotone clock: now={now} < last={last}")]
    ClockWentBackwards { now: f64, last: f64 },

    #[error("no map landmark of kind {0:?} to associate against")]
    NoLandmarkOfKind(crate::field::LandmarkKind),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("training aborted: {0}")]
    Training(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
