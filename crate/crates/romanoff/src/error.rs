//! Error type shared by every module.

use thiserror::Error;

/// Errors produced by sieve construction, B-set handling, and the report
/// pipelines.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation
    /// (odd pair gap, x below e^e, s outside 1..=ell, and so on).
    #[error("domain error: {0}")]
    Domain(String),

    /// An argument exceeds the sieved range or another configured bound.
    #[error("range error: {0}")]
    Range(String),

    /// The operation would exceed a configured memory budget.
    #[error("resource error: {0}")]
    Resource(String),

    /// A primorial product does not fit in 64 bits.
    #[error("primorial overflow: product of the first {k} primes exceeds u64")]
    PrimorialOverflow { k: u32 },

    /// A block boundary exp((j+1)^m) does not fit the supported width.
    #[error("block overflow: exp(({j}+1)^{m}) exceeds the supported range; largest supported block index for m={m} is {max_j}")]
    BlockOverflow { m: u32, j: u32, max_j: u32 },

    /// An explicit B-set file failed to parse.
    #[error("input error at line {line}: {msg}")]
    Input { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
