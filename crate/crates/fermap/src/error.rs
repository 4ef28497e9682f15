//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operator size mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("lattice too small: {width}x{height} (need at least 2x2 so faces exist)")]
    LatticeTooSmall { width: usize, height: usize },

    #[error("vertex ({x},{y}) is not on the lattice")]
    VertexOutOfRange { x: usize, y: usize },

    #[error("edge ({x0},{y0})-({x1},{y1}) is not a lattice edge")]
    EdgeNotInLattice { x0: usize, y0: usize, x1: usize, y1: usize },

    #[error("mode index {index} out of range (have {modes} modes)")]
    ModeOutOfRange { index: usize, modes: usize },

    #[error("path is broken at step {step}: vertices are not adjacent")]
    BrokenPath { step: usize },

    #[error("loop does not close or has fewer than 3 distinct vertices")]
    NotALoop,

    #[error("no corner vertices bounding odd faces on which to define a Majorana (case II)")]
    NoMajoranaCorner,

    #[error("operation requires lattice case {required}, but this lattice is case {actual}")]
    WrongCase { required: &'static str, actual: &'static str },

    #[error("stabilizer generators must pairwise commute")]
    NonCommutingGenerators,

    #[error("stabilizer generators are dependent or contain the identity")]
    DependentGenerators,

    #[error("operator is not of the expected stabilizer form: {reason}")]
    UnexpectedGeneratorForm { reason: String },

    #[error("size cap exceeded: {qubits} qubits (dense oracle caps at {cap})")]
    SizeCapExceeded { qubits: usize, cap: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("linear algebra backend error: {0}")]
    Linalg(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Linalg(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
