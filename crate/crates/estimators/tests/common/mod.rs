#![allow(dead_code)]

use data_sim::{make_ground_truth, CountDataset, GroundTruthConfig};
use spam_model::{
    probability_table, MeasurementParams, Method, SpamParameterSet, StateParams,
    ZMeasurementNoise,
};

pub fn truth_config(seed: u64) -> GroundTruthConfig {
    GroundTruthConfig { seed, ..GroundTruthConfig::default() }
}

pub fn truth_b(seed: u64) -> SpamParameterSet {
    make_ground_truth(&truth_config(seed), Method::B).unwrap()
}

pub fn truth_c(seed: u64) -> SpamParameterSet {
    make_ground_truth(&truth_config(seed), Method::C).unwrap()
}

/// A 5×5 set whose probability table contains only 0.1, 0.5 and 0.9, so
/// counts at round numbers of shots represent every cell exactly.
pub fn grid_aligned_c_set() -> SpamParameterSet {
    SpamParameterSet::new(
        Method::C,
        vec![
            StateParams::FixedPlusZ,
            StateParams::PlanarX { rx: 1.0, rz: 0.0 },
            StateParams::General { rx: 0.0, ry: 1.0, rz: 0.0 },
            StateParams::General { rx: 0.0, ry: 0.0, rz: -1.0 },
            StateParams::General { rx: 0.0, ry: -1.0, rz: 0.0 },
        ],
        vec![
            MeasurementParams::FixedPlusZ,
            MeasurementParams::General { rx: 1.0, ry: 0.0, rz: 0.0 },
            MeasurementParams::General { rx: 0.0, ry: 1.0, rz: 0.0 },
            MeasurementParams::General { rx: 0.0, ry: 0.0, rz: -1.0 },
            MeasurementParams::General { rx: -1.0, ry: 0.0, rz: 0.0 },
        ],
        ZMeasurementNoise { eps0: 0.1, eps1: 0.1 },
        None,
    )
    .unwrap()
}

/// Exact-agreement dataset for a static set: counts n = N·p with N chosen
/// by the caller to make every product integral.
pub fn exact_static_data(set: &SpamParameterSet, shots: u64) -> CountDataset {
    CountDataset::from_static_probabilities(&probability_table(set), shots).unwrap()
}

/// Replaces one static cell's count.
pub fn with_count(data: &CountDataset, i: usize, j: usize, n: u64) -> CountDataset {
    let mut counts = Vec::new();
    for ii in 0..data.n_states() {
        for jj in 0..data.n_measurements() {
            counts.push(if (ii, jj) == (i, j) { n } else { data.count(ii, jj, 0) });
        }
    }
    CountDataset::new(
        data.layout(),
        data.n_states(),
        data.n_measurements(),
        data.times().to_vec(),
        counts,
        data.shots(),
    )
    .unwrap()
}
