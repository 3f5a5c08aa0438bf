use thiserror::Error;

/// Errors raised by the model, proximity, recall and analysis operations.
///
/// Neuron labels and positions carried in these errors are 1-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector has no entries")]
    EmptyVector,

    #[error("entry {position} is {value}, expected +1 or -1")]
    NotBipolar { position: usize, value: i64 },

    #[error("memory set is empty, dimension unknown")]
    EmptyMemorySet,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("diagonal entry ({index}, {index}) is nonzero")]
    NonzeroDiagonal { index: usize },

    #[error("negative distance {value} at ({row}, {col})")]
    NegativeDistance { row: usize, col: usize, value: f64 },

    #[error("distance at ({row}, {col}) is not a finite number")]
    NonFiniteDistance { row: usize, col: usize },

    #[error("neuron {label} out of range 1..={n}")]
    NeuronOutOfRange { label: usize, n: usize },

    #[error("order is not a permutation of 1..={n}")]
    InvalidOrder { n: usize },

    #[error("seed is empty")]
    EmptySeed,

    #[error("seed has {len} bits but the network has {n} neurons")]
    SeedTooLong { len: usize, n: usize },

    #[error("{n} neurons exceeds the enumeration limit of {limit}")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
