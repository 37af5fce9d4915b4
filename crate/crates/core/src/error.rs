use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{0} requires a closed model")]
    NotClosed(&'static str),
    #[error("parallel curve degenerates: offset {offset} >= limit {limit}")]
    DegenerateOffset { offset: f64, limit: f64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("network does not cover the samples: energy {energy} > {radius}")]
    NotCovered { energy: f64, radius: f64 },
    #[error("stationarity formula is singular (sin 2α = 0)")]
    SingularFormula,
    #[error("local geometry matches no stationarity case: {0}")]
    UnknownCase(String),
    #[error("topology enumeration capped at {cap} terminals, got {k}")]
    TooManyTerminals { k: usize, cap: usize },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
