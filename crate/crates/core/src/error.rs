use thiserror::Error;

/// Errors raised by the toric engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroVector: the zero vector has no primitive representative")]
    ZeroVector,

    #[error("DimensionMismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("NoSolution: the linear system is inconsistent")]
    NoSolution,

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("fan is not complete")]
    NotComplete,

    #[error("NotCartier: no integral local datum on maximal cone {cone}")]
    NotCartier { cone: usize },

    #[error("NotQCartier: no rational local datum on maximal cone {cone}")]
    NotQCartier { cone: usize },

    #[error("RequiresSmoothComplete: operation needs a smooth complete fan")]
    RequiresSmoothComplete,

    #[error("RequiresNef: divisor is not nef")]
    RequiresNef,

    #[error("divisors live on different fans")]
    FanMismatch,

    #[error("ray index {0} out of range")]
    RayOutOfRange(usize),

    #[error("Unbounded: polyhedron has a nontrivial recession cone")]
    Unbounded,

    #[error("OriginNotInterior: the origin is not an interior point")]
    OriginNotInterior,

    #[error("polytope is not full-dimensional")]
    NotFullDimensional,

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
