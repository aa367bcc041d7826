use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("objective/data mismatch: {detail}")]
    ShapeMismatch { detail: String },
    #[error("invalid optimizer budget: {detail}")]
    BadBudget { detail: String },
    #[error("initial strategy unusable here: {detail}")]
    BadInit { detail: String },
    #[error(transparent)]
    Model(#[from] spam_model::Error),
    #[error(transparent)]
    Data(#[from] data_sim::Error),
    #[error(transparent)]
    Core(#[from] qubit_core::Error),
}
