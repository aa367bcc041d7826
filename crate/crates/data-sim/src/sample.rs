//! Binomial count sampling for static, timeseries and process data.
//!
//! Every cell is an independent Binomial(N, p) draw with p taken from the
//! exact model prediction; the sampler is exact at any N (no Gaussian
//! approximation), which matters when acceptance checks probe tails at
//! N = 10⁹. Cells are drawn in row-major (state, measurement, time) order
//! from a single seeded stream, so a dataset is a pure function of
//! (inputs, seed).

use qubit_core::{apply_choi, born_probability, ChoiState};
use rand_distr::{Binomial, Distribution};
use spam_model::{predict_timeseries, probability_table, realize, SpamParameterSet};

use crate::dataset::{CountDataset, DatasetLayout};
use crate::error::{Error, Result};
use crate::seeds::rng_from;

/// Counts for one pass over the static table: each (i, j) cell gets N shots
/// against p_{j|i} from the truth's t = 0 prediction.
pub fn sample_static(truth: &SpamParameterSet, shots: u64, seed: u64) -> Result<CountDataset> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let table = probability_table(truth);
    let mut rng = rng_from(seed);
    let mut counts = Vec::with_capacity(table.len());
    for i in 0..table.nrows() {
        for j in 0..table.ncols() {
            counts.push(draw_binomial(&mut rng, shots, table[(i, j)]));
        }
    }
    CountDataset::new(
        DatasetLayout::Static,
        table.nrows(),
        table.ncols(),
        Vec::new(),
        counts,
        shots,
    )
}

/// Counts on a time grid: cell (i, j, k) gets N shots against p_{j|i}(t_k).
/// The truth must carry evolution parameters.
pub fn sample_timeseries(
    truth: &SpamParameterSet,
    times: &[f64],
    shots: u64,
    seed: u64,
) -> Result<CountDataset> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    if truth.evolution().is_none() {
        return Err(Error::MissingEvolution { method: truth.method() });
    }
    let tables = predict_timeseries(truth, times)?;
    let n_states = truth.states().len();
    let n_measurements = truth.measurements().len();
    let mut rng = rng_from(seed);
    let mut counts = Vec::with_capacity(n_states * n_measurements * times.len());
    for i in 0..n_states {
        for j in 0..n_measurements {
            for table in &tables {
                counts.push(draw_binomial(&mut rng, shots, table[(i, j)]));
            }
        }
    }
    CountDataset::new(
        DatasetLayout::Timeseries,
        n_states,
        n_measurements,
        times.to_vec(),
        counts,
        shots,
    )
}

/// Counts for gate tomography: every prepared state passes through the
/// process before measurement, so cell (i, j) draws against
/// Tr(E_j 𝓔(ρ_i)). The process must be a physical map.
pub fn sample_process(
    truth_spam: &SpamParameterSet,
    process: &ChoiState,
    shots: u64,
    seed: u64,
) -> Result<CountDataset> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    if !process.is_physical() {
        return Err(Error::UnphysicalChoi);
    }
    let (states, effects) = realize(truth_spam)?;
    let mut rng = rng_from(seed);
    let mut counts = Vec::with_capacity(states.len() * effects.len());
    for rho in &states {
        let out = apply_choi(process, rho);
        for e in &effects {
            counts.push(draw_binomial(&mut rng, shots, born_probability(&out, e)));
        }
    }
    CountDataset::new(
        DatasetLayout::Static,
        states.len(),
        effects.len(),
        Vec::new(),
        counts,
        shots,
    )
}

fn draw_binomial(rng: &mut rand_chacha::ChaCha12Rng, shots: u64, p: f64) -> u64 {
    let p = p.clamp(0.0, 1.0);
    Binomial::new(shots, p)
        .expect("clamped probability is valid")
        .sample(rng)
}
