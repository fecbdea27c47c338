use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph: {0}")]
    Validation(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{n} vertices exceed the brute-force cap of {cap}")]
    BruteForceCap { n: usize, cap: usize },
    #[error("assignment covers {got} vertices, graph has {expected}")]
    AssignmentLength { expected: usize, got: usize },
    #[error("graph is not regular")]
    NotRegular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Validates `1 <= k <= n` and `n >= 1`.
pub(crate) fn check_k(k: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(())
}
