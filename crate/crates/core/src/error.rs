use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the linear algebra, state, measure and bound layers.
///
/// Every variant is a domain error: the inputs fall outside the region where
/// the requested quantity is defined.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemOutOfRange { index: usize, count: usize },

    #[error("subsystem set must not be empty")]
    EmptySubsystemSet,

    #[error("bipartition must be a nonempty proper subset of the subsystems")]
    TrivialBipartition,

    #[error("expected a two-qubit state, got subsystem dims {dims:?}")]
    NotTwoQubit { dims: Vec<usize> },

    #[error("measure value {value} at position {index} is negative or not finite")]
    InvalidMeasure { index: usize, value: f64 },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error(
        "ratio condition E_{i}^g >= a*E_{j}^g fails at parts ({i}, {j}) for a = {a}; \
         largest admissible a is {max_a}",
        i = .index + 1,
        j = .index + 2
    )]
    RatioCondition { index: usize, a: f64, max_a: f64 },

    #[error("{operation} expects {expected} parts, got {got}")]
    PartCount {
        operation: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{operation} requires {expected:?} mode")]
    WrongMode {
        operation: &'static str,
        expected: crate::bounds::Mode,
    },

    #[error("grid of s values is empty")]
    EmptyGrid,

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}
