use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error on `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not planar")]
    NonPlanar,

    #[error("graph contains a cycle")]
    HasCycle,

    #[error("embedding has {got} points but the graph has {expected} vertices")]
    PointCount { expected: usize, got: usize },

    #[error("invalid solver configuration: {0}")]
    Config(String),

    #[error("invalid series: {0}")]
    Series(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
