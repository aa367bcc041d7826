//! Finite-shot count tables.
//!
//! A dataset stores the number of "+" outcomes n out of N shots for every
//! (state i, measurement j) cell, and for timeseries data additionally per
//! time point t_k. Counts are stored flat in row-major (i, j, k) order.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether the counts were taken at t = 0 only or on a time grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DatasetLayout {
    Static,
    Timeseries,
}

/// Rectangular table of binomial counts, one cell per (state, measurement)
/// pair and per time point. Static data have exactly one implicit time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCountDataset", into = "RawCountDataset")]
pub struct CountDataset {
    layout: DatasetLayout,
    n_states: usize,
    n_measurements: usize,
    times: Vec<f64>,
    counts: Vec<u64>,
    shots: u64,
}

#[derive(Serialize, Deserialize)]
struct RawCountDataset {
    layout: DatasetLayout,
    n_states: usize,
    n_measurements: usize,
    times: Vec<f64>,
    counts: Vec<u64>,
    shots: u64,
}

impl From<CountDataset> for RawCountDataset {
    fn from(d: CountDataset) -> Self {
        RawCountDataset {
            layout: d.layout,
            n_states: d.n_states,
            n_measurements: d.n_measurements,
            times: d.times,
            counts: d.counts,
            shots: d.shots,
        }
    }
}

impl TryFrom<RawCountDataset> for CountDataset {
    type Error = Error;

    fn try_from(raw: RawCountDataset) -> Result<Self> {
        CountDataset::new(
            raw.layout,
            raw.n_states,
            raw.n_measurements,
            raw.times,
            raw.counts,
            raw.shots,
        )
    }
}

impl CountDataset {
    pub fn new(
        layout: DatasetLayout,
        n_states: usize,
        n_measurements: usize,
        times: Vec<f64>,
        counts: Vec<u64>,
        shots: u64,
    ) -> Result<Self> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        match layout {
            DatasetLayout::Static => {
                if !times.is_empty() {
                    return Err(Error::BadDataset {
                        detail: "static data carry no time grid".into(),
                    });
                }
            }
            DatasetLayout::Timeseries => {
                if times.is_empty() {
                    return Err(Error::BadDataset {
                        detail: "timeseries data need at least one time".into(),
                    });
                }
                if times.iter().any(|t| !t.is_finite() || *t < 0.0) {
                    return Err(Error::BadDataset {
                        detail: "times must be finite and nonnegative".into(),
                    });
                }
            }
        }
        let n_times = times.len().max(1);
        let expected = n_states * n_measurements * n_times;
        if counts.len() != expected {
            return Err(Error::BadDataset {
                detail: format!(
                    "table must hold {n_states}x{n_measurements}x{n_times} = {expected} cells, got {}",
                    counts.len()
                ),
            });
        }
        if let Some(&bad) = counts.iter().find(|&&n| n > shots) {
            return Err(Error::BadDataset {
                detail: format!("count {bad} exceeds shot number {shots}"),
            });
        }
        Ok(CountDataset { layout, n_states, n_measurements, times, counts, shots })
    }

    /// Noise-free counts n = round(N·p) from a static probability table;
    /// useful as an infinite-statistics stand-in.
    pub fn from_static_probabilities(table: &DMatrix<f64>, shots: u64) -> Result<Self> {
        let mut counts = Vec::with_capacity(table.len());
        for i in 0..table.nrows() {
            for j in 0..table.ncols() {
                counts.push(to_count(table[(i, j)], shots));
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

    /// Noise-free counts from per-time probability tables.
    pub fn from_timeseries_probabilities(
        tables: &[DMatrix<f64>],
        times: Vec<f64>,
        shots: u64,
    ) -> Result<Self> {
        let (n_states, n_measurements) = match tables.first() {
            Some(t) => (t.nrows(), t.ncols()),
            None => {
                return Err(Error::BadDataset { detail: "no probability tables given".into() })
            }
        };
        let mut counts = Vec::with_capacity(n_states * n_measurements * tables.len());
        for i in 0..n_states {
            for j in 0..n_measurements {
                for table in tables {
                    counts.push(to_count(table[(i, j)], shots));
                }
            }
        }
        CountDataset::new(
            DatasetLayout::Timeseries,
            n_states,
            n_measurements,
            times,
            counts,
            shots,
        )
    }

    pub fn layout(&self) -> DatasetLayout {
        self.layout
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_measurements(&self) -> usize {
        self.n_measurements
    }

    pub fn n_times(&self) -> usize {
        self.times.len().max(1)
    }

    /// Time grid; empty for static data.
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    /// "+" count for state `i`, measurement `j`, time index `k` (use 0 for
    /// static data).
    pub fn count(&self, i: usize, j: usize, k: usize) -> u64 {
        self.counts[(i * self.n_measurements + j) * self.n_times() + k]
    }

    /// Observed frequency n/N for one cell.
    pub fn frequency(&self, i: usize, j: usize, k: usize) -> f64 {
        self.count(i, j, k) as f64 / self.shots as f64
    }

}

fn to_count(p: f64, shots: u64) -> u64 {
    ((p.clamp(0.0, 1.0) * shots as f64).round() as u64).min(shots)
}
