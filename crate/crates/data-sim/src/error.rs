use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid ground truth configuration: {detail}")]
    BadConfig { detail: String },
    #[error("timeseries sampling needs evolution parameters, method {method} has none")]
    MissingEvolution { method: spam_model::Method },
    #[error("process matrix is not physical (negative or trace non-preserving)")]
    UnphysicalChoi,
    #[error("shot count must be at least 1")]
    ZeroShots,
    #[error("invalid count dataset: {detail}")]
    BadDataset { detail: String },
    #[error(transparent)]
    Model(#[from] spam_model::Error),
    #[error(transparent)]
    Core(#[from] qubit_core::Error),
}
