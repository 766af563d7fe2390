use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("negative radicand {0} in square root")]
    NegativeRadicand(String),

    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("partition {0} is not in the rectangle set")]
    NotInP(Partition),

    #[error("partition {0} is not obtained by adding one box to the rectangle set")]
    NotInP1(Partition),

    #[error("partition {partition} is not in level {level} of the tower")]
    NotInPk { partition: Partition, level: usize },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("vertex {partition} not found at rank {rank}")]
    VertexNotFound { partition: Partition, rank: usize },

    #[error("generator {0} has no assigned matrix and no derivation")]
    UnassignedGenerator(String),

    #[error("criterion failure ({item}): {detail}")]
    CriterionFailure { item: String, detail: String },

    #[error("relation failure ({tag}): {name}")]
    RelationFailure { name: String, tag: String },

    #[error("tableaux share a shifted-content list: {0}")]
    DistinctnessFailure(String),

    #[error("no connectivity witness: {0}")]
    ConnectivityFailure(String),

    #[error("desk-scale cap exceeded: {0}")]
    CapExceeded(String),

    #[error("partition {partition} has height above {n}")]
    HeightExceeded { partition: Partition, n: usize },

    #[error("factor {0} out of range")]
    FactorOutOfRange(usize),

    #[error("commutant failure: {0}")]
    CommutantFailure(String),

    #[error("spectrum mismatch: {0}")]
    SpectrumMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
