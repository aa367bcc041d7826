//! Weighted least-squares objectives on count data.
//!
//! Both objectives have the Gaussian-approximation form
//!
//!   Σ_cells w_c (p_model,c − p̃_c)²,  p̃ = n/N,
//!
//! with data-determined weights held fixed during optimization. The default
//! convention uses w = N/(p̂(1−p̂)) (the inverse variance of a frequency),
//! which makes the sum a proper χ² statistic; the alternative convention
//! reproduces a printed form weighting by 1/σ with σ = √(N p̂(1−p̂)) taken
//! on counts. Observed frequencies are clamped to [1/(2N), 1−1/(2N)]
//! before weighting so certain cells carry large but finite weight.

use data_sim::{CountDataset, DatasetLayout};
use serde::{Deserialize, Serialize};
use spam_model::{predict_timeseries, probability_table, Method, SpamParameterSet};

use crate::error::{Error, Result};

/// Which per-cell weight multiplies the squared frequency residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum WeightConvention {
    /// w = N/(p̂(1−p̂)); residuals in units of their standard deviation.
    #[default]
    ChiSquare,
    /// w = 1/√(N p̂(1−p̂)); the literal printed weighting, kept as a toggle.
    PaperLiteral,
}

impl WeightConvention {
    /// Weight for one cell given the clamped observed frequency.
    pub(crate) fn weight(self, p_hat: f64, shots: u64) -> f64 {
        let variance = p_hat * (1.0 - p_hat);
        match self {
            WeightConvention::ChiSquare => shots as f64 / variance,
            WeightConvention::PaperLiteral => 1.0 / (shots as f64 * variance).sqrt(),
        }
    }
}

/// Observed frequency clamped away from 0 and 1 by half a shot.
pub(crate) fn clamped_frequency(data: &CountDataset, i: usize, j: usize, k: usize) -> f64 {
    let half_shot = 0.5 / data.shots() as f64;
    data.frequency(i, j, k).clamp(half_shot, 1.0 - half_shot)
}

fn check_table_shape(params: &SpamParameterSet, data: &CountDataset) -> Result<()> {
    if params.states().len() != data.n_states()
        || params.measurements().len() != data.n_measurements()
    {
        return Err(Error::ShapeMismatch {
            detail: format!(
                "parameters describe a {}x{} table, data hold {}x{}",
                params.states().len(),
                params.measurements().len(),
                data.n_states(),
                data.n_measurements()
            ),
        });
    }
    Ok(())
}

/// Static-table objective for the t = 0 methods.
pub fn nll_static(
    params: &SpamParameterSet,
    data: &CountDataset,
    convention: WeightConvention,
) -> Result<f64> {
    if params.method() == Method::B {
        return Err(Error::ShapeMismatch {
            detail: "method B parameters are identified on timeseries data".into(),
        });
    }
    if data.layout() != DatasetLayout::Static {
        return Err(Error::ShapeMismatch {
            detail: "static objective needs static data".into(),
        });
    }
    check_table_shape(params, data)?;
    let model = probability_table(params);
    let mut sum = 0.0;
    for i in 0..data.n_states() {
        for j in 0..data.n_measurements() {
            let p_hat = clamped_frequency(data, i, j, 0);
            let w = convention.weight(p_hat, data.shots());
            let r = model[(i, j)] - data.frequency(i, j, 0);
            sum += w * r * r;
        }
    }
    Ok(sum)
}

/// Timeseries objective for the free-evolution method.
pub fn nll_timeseries(
    params: &SpamParameterSet,
    data: &CountDataset,
    convention: WeightConvention,
) -> Result<f64> {
    if params.method() != Method::B {
        return Err(Error::ShapeMismatch {
            detail: format!("timeseries objective needs method B parameters, got {}", params.method()),
        });
    }
    if data.layout() != DatasetLayout::Timeseries {
        return Err(Error::ShapeMismatch {
            detail: "timeseries objective needs timeseries data".into(),
        });
    }
    check_table_shape(params, data)?;
    let tables = predict_timeseries(params, data.times())?;
    let mut sum = 0.0;
    for i in 0..data.n_states() {
        for j in 0..data.n_measurements() {
            for (k, table) in tables.iter().enumerate() {
                let p_hat = clamped_frequency(data, i, j, k);
                let w = convention.weight(p_hat, data.shots());
                let r = table[(i, j)] - data.frequency(i, j, k);
                sum += w * r * r;
            }
        }
    }
    Ok(sum)
}

/// The objective matching the data layout: static for A/C, timeseries
/// for B.
pub fn nll(
    params: &SpamParameterSet,
    data: &CountDataset,
    convention: WeightConvention,
) -> Result<f64> {
    match params.method() {
        Method::A | Method::C => nll_static(params, data, convention),
        Method::B => nll_timeseries(params, data, convention),
    }
}
