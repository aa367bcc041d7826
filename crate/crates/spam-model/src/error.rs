use thiserror::Error;

use crate::types::Method;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter vector for method {method} must have length {expected}, got {got}")]
    WrongLength { method: Method, expected: usize, got: usize },
    #[error("invalid parameter structure: {detail}")]
    Structure { detail: String },
    #[error("{what} has norm {norm:.6}, outside the unit ball")]
    NormBound { what: String, norm: f64 },
    #[error("measurement noise {value:.6} outside [0, 0.5)")]
    NoiseBound { value: f64 },
    #[error("non-finite parameter encountered")]
    NonFinite,
    #[error("{op} does not apply to method {method}")]
    MethodMismatch { op: &'static str, method: Method },
    #[error(transparent)]
    Core(#[from] qubit_core::Error),
}
