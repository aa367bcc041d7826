use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frequency table does not match the SPAM set: {detail}")]
    ShapeMismatch { detail: String },
    #[error("process inversion needs at least 12 cells, got {cells}")]
    TooFewCells { cells: usize },
    #[error("SPAM set is not informationally complete: design rank {rank} < 12")]
    NotInformationallyComplete { rank: usize },
    #[error("transfer-matrix top row must be (1,0,0,0), deviates by {deviation:.3e}")]
    FixedRowViolated { deviation: f64 },
    #[error("gate duration is undefined at zero rotation rate")]
    ZeroRotation,
    #[error("Cholesky parameters are degenerate (T†T has vanishing trace)")]
    DegenerateParams,
    #[error("shot count must be positive and finite, got {shots}")]
    BadShots { shots: f64 },
    #[error("invalid projection budget: {detail}")]
    BadBudget { detail: String },
    #[error(transparent)]
    Core(#[from] qubit_core::Error),
}
