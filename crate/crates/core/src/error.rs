use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("J({m},{n}) has {size} elements, above the cap of {cap}")]
    SizeCap { m: usize, n: i32, size: u128, cap: u128 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("undefined: {0}")]
    Partial(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
