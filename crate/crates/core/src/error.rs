use thiserror::Error;

/// Errors raised by constructors, bounds and oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),
    /// Conditioning on an event of probability zero.
    #[error("degenerate measure: coordinate {coordinate} has zero probability of {sign:+}")]
    DegenerateMeasure { coordinate: usize, sign: i8 },
    #[error("regime violation: {0}")]
    RegimeViolation(String),
    #[error("no feasible weighting: {0}")]
    NoFeasibleWeighting(String),
    #[error("instance too large: {what} is {actual}, limit {limit}")]
    InstanceTooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("hypergraph is not complete")]
    NotComplete,
    #[error("hypergraph is not complete equipartite")]
    NotEquipartite,
    #[error("weighting is not constant on edge classes")]
    NotClassConstant,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
