//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian within tolerance (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("operator set is empty")]
    EmptySet,

    #[error("Bloch vector has norm {0} > 1 beyond tolerance")]
    BlochNorm(f64),

    #[error("input is not a quantum state: {0}")]
    NonState(String),

    #[error("orbit collapse: operators {0} and {1} produce the same projective state")]
    OrbitCollapse(usize, usize),

    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("point {point} lies on line {line}: a flag has no anti-flag label")]
    FlagNotAntiflag { line: usize, point: usize },

    #[error("octonionic Gerzon bound is only defined at d = 3 (got d = {0})")]
    OctonionicDimension(usize),

    #[error("group closure exceeded {0} elements; exact arithmetic is inconsistent")]
    ClosureOverflow(usize),

    #[error("trine extraction expected {expected} orthogonal states, found {found}")]
    OrthogonalCount { expected: usize, found: usize },

    #[error("reconstruction did not yield a pure state (deviation {0:.3e})")]
    NotPure(f64),

    #[error("unknown family: {0}")]
    UnknownFamily(String),

    #[error("unknown format: {0} (expected json, csv or text)")]
    UnknownFormat(String),

    #[error("malformed document: {0}")]
    Decode(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
