use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("redundant relation system: {0}")]
    RedundantSystem(String),

    #[error("invalid module {top}:{length}: {reason}")]
    InvalidModule {
        top: usize,
        length: usize,
        reason: String,
    },

    #[error("module {top}:{length} is not projective")]
    NotProjective { top: usize, length: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid census parameters: {0}")]
    InvalidParams(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
