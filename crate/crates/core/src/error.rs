use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (graph files, family specs, signed words).
    #[error("parse error: {0}")]
    Parse(String),
    /// Structurally valid input that violates a domain precondition.
    #[error("{0}")]
    Domain(String),
    /// An enumeration would exceed a configured resource ceiling.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    /// A computed quantity contradicts an identity that must hold; this is a
    /// bug or corrupted input, never a user error.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }
}
