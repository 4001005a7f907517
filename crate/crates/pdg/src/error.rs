//! Error type shared by the solver crates.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported polynomial degree {0}, supported range is 1..=8")]
    UnsupportedDegree(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dependency graph has a cycle through cells {0:?}")]
    Cycle(Vec<usize>),

    #[error("singular local transport block in cell {cell}")]
    SingularBlock { cell: usize },

    #[error("source Newton solve did not converge, residual {residual:.3e}")]
    NewtonDiverged { residual: f64 },

    #[error("relaxation substep dt = {dt} hits the pole 2*tau + dt = 0 (tau = {tau})")]
    RelaxationPole { dt: f64, tau: f64 },

    #[error("entropy is not defined for this system")]
    EntropyUndefined,

    #[error("vacuum state in the exact Riemann solution")]
    Vacuum,

    #[error("unknown identifier `{0}`")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
