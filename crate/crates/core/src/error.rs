use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid system size {n}: need at least {min}")]
    InvalidSize { n: usize, min: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid one-magnon label: {0}")]
    InvalidLabel(String),
    #[error("invalid node pair ({j}, {k}) for n = {n}")]
    InvalidPair { j: usize, k: usize, n: usize },
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("resource limit: n = {n} exceeds the brute-force cap {cap}")]
    ResourceLimit { n: usize, cap: usize },
    #[error("numerical instability: {0}")]
    NumericalInstability(String),
    #[error("root finding failed: {0}")]
    RootFinding(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
