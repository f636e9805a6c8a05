//! Error type shared by all modules of the crate.

/// Errors surfaced by table construction, counting and sum evaluation.
///
/// The variants map onto the process exit codes used by the CLI:
/// `Config`, `Range` and `Domain` are usage errors, `Budget` means a
/// desk-scale enumeration limit was exceeded, and `Internal` signals a
/// broken invariant (a bug, not bad input).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
