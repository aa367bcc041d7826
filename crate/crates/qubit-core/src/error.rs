use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m - m†| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("trace deviates from 1 by {deviation:.3e}")]
    TraceNotOne { deviation: f64 },
    #[error("negative eigenvalue {value:.3e} below tolerance")]
    NegativeEigenvalue { value: f64 },
    #[error("effect eigenvalue {value:.6} outside [0, 1]")]
    EffectOutOfRange { value: f64 },
    #[error("Bloch vector norm {norm:.6} exceeds 1")]
    BlochNormTooLarge { norm: f64 },
    #[error("time must be nonnegative, got {t}")]
    NegativeTime { t: f64 },
    #[error("rotation rate must be nonnegative, got {omega}")]
    NegativeRate { omega: f64 },
    #[error("decoherence time must be positive, got {t2}")]
    NonPositiveT2 { t2: f64 },
    #[error("axis must be a unit vector (norm {norm:.6})")]
    AxisNotUnit { norm: f64 },
    #[error("integrator step count must be positive")]
    ZeroSteps,
    #[error("matrix is not unitary (max |u†u - I| = {deviation:.3e})")]
    NotUnitary { deviation: f64 },
}
