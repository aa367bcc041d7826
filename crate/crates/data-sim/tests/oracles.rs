//! Fixed-value checks: every expected number here is either immediate from
//! the definitions or frozen from an independent closed-form evaluation.

use approx::assert_abs_diff_eq;
use data_sim::{
    default_time_grid, make_ground_truth, sample_process, sample_static, sample_timeseries,
    seeds, CountDataset, DatasetLayout, Error, GroundTruthConfig,
};
use nalgebra::DMatrix;
use qubit_core::{
    apply_choi, born_probability, choi_from_unitary, lindblad_choi, pauli::c, BlochVector,
    ChoiState, EvolutionParams,
};
use spam_model::{ideal_parameter_set, pack, predict_timeseries, realize, Method};

fn exact_config(seed: u64) -> GroundTruthConfig {
    GroundTruthConfig {
        systematic_angle_deg: 0.0,
        stochastic_scale: 0.0,
        seed,
        ..GroundTruthConfig::default()
    }
}

#[test]
fn zero_error_config_reproduces_ideal_axes() {
    for method in [Method::B, Method::C] {
        let truth = make_ground_truth(&exact_config(3), method).unwrap();
        let ev = method.has_evolution().then(|| EvolutionParams::new(1.0, 100.0).unwrap());
        let ideal = ideal_parameter_set(method, ev).unwrap();
        for (a, b) in pack(&truth).iter().zip(pack(&ideal).iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-15);
        }
    }
    // Static data for the constrained method come from the free 4×3 shape.
    let truth_for_a = make_ground_truth(&exact_config(3), Method::A).unwrap();
    assert_eq!(truth_for_a.method(), Method::B);
}

#[test]
fn default_config_tilts_x_measurement_into_expected_window() {
    // The tilt law Normal(10°, 2°) puts the angle between the second
    // measurement and x̂ inside [5°, 15°] with probability Φ(2.5) − Φ(−2.5)
    // ≈ 0.9876, so over 1000 seeds well over 90% must land inside and at
    // least one outside.
    let mut inside = 0;
    for seed in 0..1000 {
        let cfg = GroundTruthConfig { seed, ..GroundTruthConfig::default() };
        let truth = make_ground_truth(&cfg, Method::C).unwrap();
        let angle = truth.measurements()[1]
            .direction()
            .angle_to(&BlochVector::X)
            .to_degrees();
        if (5.0..=15.0).contains(&angle) {
            inside += 1;
        }
    }
    assert!(inside >= 900, "only {inside} of 1000 tilts in [5°, 15°]");
    assert!(inside <= 999, "tilt law looks clamped, all 1000 inside");
}

#[test]
fn truth_is_deterministic_in_seed() {
    let cfg = GroundTruthConfig { seed: 77, ..GroundTruthConfig::default() };
    let a = make_ground_truth(&cfg, Method::B).unwrap();
    let b = make_ground_truth(&cfg, Method::B).unwrap();
    assert_eq!(a, b);
    let other = GroundTruthConfig { seed: 78, ..cfg };
    assert_ne!(make_ground_truth(&other, Method::B).unwrap(), a);
}

#[test]
fn truth_violates_constrained_model_assumptions() {
    // The 12-parameter model assumes a unit-norm second measurement pinned
    // to the x-z plane; the generated truth must break both.
    let mut clearly_out_of_plane = 0;
    for seed in 0..100 {
        let cfg = GroundTruthConfig { seed, ..GroundTruthConfig::default() };
        let truth = make_ground_truth(&cfg, Method::B).unwrap();
        let r2 = truth.measurements()[1].direction();
        assert!(r2.norm() < 1.0, "seed {seed}: norm {} not shrunk", r2.norm());
        if r2.y.abs() > 0.01 {
            clearly_out_of_plane += 1;
        }
    }
    assert!(clearly_out_of_plane >= 90, "only {clearly_out_of_plane} tilts leave the plane");
}

#[test]
fn truth_is_always_physical() {
    let configs = [
        GroundTruthConfig::default(),
        GroundTruthConfig {
            systematic_angle_deg: 25.0,
            stochastic_scale: 0.2,
            ..GroundTruthConfig::default()
        },
    ];
    for base in configs {
        for seed in 0..500 {
            for method in [Method::B, Method::C] {
                let cfg = GroundTruthConfig { seed, ..base };
                let truth = make_ground_truth(&cfg, method).unwrap();
                realize(&truth).expect("generated truth must realize");
                assert!(truth.noise().eps0 <= 0.3 && truth.noise().eps1 <= 0.3);
                for s in truth.states() {
                    assert!(s.bloch().norm() <= 1.0);
                }
                for m in truth.measurements() {
                    assert!(m.direction().norm() <= 1.0);
                }
            }
        }
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let bad = [
        GroundTruthConfig { systematic_angle_deg: -1.0, ..GroundTruthConfig::default() },
        GroundTruthConfig { stochastic_scale: 0.5, ..GroundTruthConfig::default() },
        GroundTruthConfig { stochastic_scale: -0.1, ..GroundTruthConfig::default() },
        GroundTruthConfig { t2: 0.0, ..GroundTruthConfig::default() },
        GroundTruthConfig { omega_rot: -2.0, ..GroundTruthConfig::default() },
    ];
    for cfg in bad {
        assert!(matches!(
            make_ground_truth(&cfg, Method::B),
            Err(Error::BadConfig { .. })
        ));
    }
}

#[test]
fn certain_cells_sample_exactly() {
    // With an ideal set, |0⟩ measured along ẑ succeeds always and the −ẑ
    // state never, independent of the seed.
    let truth = ideal_parameter_set(Method::C, None).unwrap();
    for seed in 0..20 {
        let data = sample_static(&truth, 1000, seed).unwrap();
        assert_eq!(data.count(0, 0, 0), 1000);
        assert_eq!(data.count(3, 0, 0), 0);
    }
}

#[test]
fn fair_coin_cell_concentrates_at_three_sigma() {
    // The x̂ state against the ẑ measurement is a fair coin; at N = 10⁶ its
    // frequency lies within 3σ = 0.0015 of ½ for ≈ 99.7% of seeds.
    let truth = ideal_parameter_set(Method::A, None).unwrap();
    let mut inside = 0;
    for seed in 0..1000 {
        let data = sample_static(&truth, 1_000_000, seed).unwrap();
        let f = data.frequency(1, 0, 0);
        if (0.4985..=0.5015).contains(&f) {
            inside += 1;
        }
    }
    assert!(inside >= 990, "only {inside} of 1000 runs inside the 3σ band");
    assert!(inside <= 999, "sampling looks degenerate, no tail events in 1000 runs");
}

#[test]
fn static_sampling_is_reproducible() {
    let cfg = GroundTruthConfig { seed: 4, ..GroundTruthConfig::default() };
    let truth = make_ground_truth(&cfg, Method::C).unwrap();
    let a = sample_static(&truth, 10_000, 123).unwrap();
    let b = sample_static(&truth, 10_000, 123).unwrap();
    assert_eq!(a, b);
    let c = sample_static(&truth, 10_000, 124).unwrap();
    assert_ne!(a, c);
}

#[test]
fn timeseries_zero_time_slice_matches_static_probabilities() {
    // The k = 0 column is sampled from the same table as static data, so
    // every observed frequency sits within 5σ of the static prediction.
    let n = 1_000_000u64;
    for seed in 0..50 {
        let cfg = GroundTruthConfig { seed, ..GroundTruthConfig::default() };
        let truth = make_ground_truth(&cfg, Method::B).unwrap();
        let table = spam_model::probability_table(&truth);
        let data = sample_timeseries(&truth, &[0.0, 50.0], n, seed ^ 0x5eed).unwrap();
        for i in 0..4 {
            for j in 0..3 {
                let p = table[(i, j)];
                let sigma = (p * (1.0 - p) / n as f64).sqrt();
                let dev = (data.frequency(i, j, 0) - p).abs();
                assert!(
                    dev <= 5.0 * sigma + 1e-9,
                    "seed {seed} cell ({i},{j}): |{dev:.2e}| > 5σ = {:.2e}",
                    5.0 * sigma
                );
            }
        }
    }
}

#[test]
fn constant_signal_pools_across_time_bins() {
    // With Ω = 0 and effectively infinite T₂ every bin of a cell shares one
    // p, so the pooled frequency over all 50 bins concentrates around it.
    let cfg = GroundTruthConfig {
        omega_rot: 0.0,
        t2: 1e12,
        seed: 9,
        ..GroundTruthConfig::default()
    };
    let truth = make_ground_truth(&cfg, Method::B).unwrap();
    let times = data_sim::time_grid(100.0, 50);
    let n = 10_000u64;
    let data = sample_timeseries(&truth, &times, n, 31).unwrap();
    let table = spam_model::probability_table(&truth);
    for i in 0..4 {
        for j in 0..3 {
            let pooled: u64 = (0..50).map(|k| data.count(i, j, k)).sum();
            let freq = pooled as f64 / (50 * n) as f64;
            let p = table[(i, j)];
            let sigma = (p * (1.0 - p) / (50 * n) as f64).sqrt();
            assert!(
                (freq - p).abs() <= 5.0 * sigma + 1e-9,
                "cell ({i},{j}): pooled {freq:.6} vs p {p:.6}"
            );
        }
    }
}

/// Damped-cosine model a + e^{−t/τ}(b cos ωt − c sin ωt) fitted by
/// least squares; returns the recovered τ.
fn fit_decay_time(times: &[f64], ys: &[f64], tau0: f64, omega0: f64) -> f64 {
    let mean = ys.iter().sum::<f64>() / ys.len() as f64;
    let x0 = nalgebra::DVector::from_vec(vec![mean, ys[0] - mean, 0.0, tau0, omega0]);
    let times = times.to_vec();
    let ys = ys.to_vec();
    let result = optim::levenberg_marquardt(
        move |x: &nalgebra::DVector<f64>| {
            nalgebra::DVector::from_iterator(
                times.len(),
                times.iter().zip(&ys).map(|(&t, &y)| {
                    let (s, cch) = (x[4] * t).sin_cos();
                    x[0] + (-t / x[3]).exp() * (x[1] * cch - x[2] * s) - y
                }),
            )
        },
        &x0,
        &optim::LmConfig::default(),
    );
    assert!(result.converged, "curve fit did not converge");
    result.x[3]
}

#[test]
fn decay_time_recoverable_from_oscillating_cell() {
    // The (state x̂-ish, measurement x̂-ish) cell carries the full envelope;
    // a five-parameter damped-cosine fit recovers T₂ = 100 within 5% both
    // from exact probabilities and from a sampled N = 10⁶ dataset.
    let cfg = GroundTruthConfig { seed: 11, ..GroundTruthConfig::default() };
    let truth = make_ground_truth(&cfg, Method::B).unwrap();
    let times = default_time_grid(100.0);
    let tables = predict_timeseries(&truth, &times).unwrap();
    let exact: Vec<f64> = tables.iter().map(|t| t[(1, 1)]).collect();
    let tau = fit_decay_time(&times, &exact, 115.0, 1.0);
    assert!((tau - 100.0).abs() / 100.0 < 0.05, "noiseless fit gave τ = {tau}");

    let data = sample_timeseries(&truth, &times, 1_000_000, 207).unwrap();
    let sampled: Vec<f64> = (0..times.len()).map(|k| data.frequency(1, 1, k)).collect();
    let tau = fit_decay_time(&times, &sampled, 115.0, 1.0);
    assert!((tau - 100.0).abs() / 100.0 < 0.05, "sampled fit gave τ = {tau}");
}

#[test]
fn identity_process_reduces_to_static_sampling() {
    let cfg = GroundTruthConfig { seed: 21, ..GroundTruthConfig::default() };
    let truth = make_ground_truth(&cfg, Method::C).unwrap();
    let via_process = sample_process(&truth, &ChoiState::identity(), 50_000, 99).unwrap();
    let direct = sample_static(&truth, 50_000, 99).unwrap();
    assert_eq!(via_process, direct);
}

#[test]
fn ideal_hadamard_maps_pole_onto_x_measurement() {
    // H|0⟩ = |+⟩, so with ideal SPAM the (state ẑ, measurement x̂) cell is
    // certain.
    let h = nalgebra::Matrix2::new(
        c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        c(-std::f64::consts::FRAC_1_SQRT_2, 0.0),
    );
    let choi = choi_from_unitary(&h).unwrap();
    let truth = ideal_parameter_set(Method::C, None).unwrap();
    let data = sample_process(&truth, &choi, 2000, 8).unwrap();
    assert_eq!(data.count(0, 1, 0), 2000);
}

#[test]
fn dephasing_process_frequencies_match_born_oracle() {
    // Frequencies under a fully dephasing map agree with a brute-force
    // operator-level evaluation of Tr(E_j 𝓔(ρ_i)) at 5σ.
    let dephase = lindblad_choi(
        300.0,
        &BlochVector::Z,
        &EvolutionParams::new(0.0, 10.0).unwrap(),
    )
    .unwrap();
    let cfg = GroundTruthConfig { seed: 5, ..GroundTruthConfig::default() };
    let truth = make_ground_truth(&cfg, Method::C).unwrap();
    let (states, effects) = realize(&truth).unwrap();
    let n = 1_000_000u64;
    let data = sample_process(&truth, &dephase, n, 613).unwrap();
    for (i, rho) in states.iter().enumerate() {
        let out = apply_choi(&dephase, rho);
        for (j, e) in effects.iter().enumerate() {
            let p = born_probability(&out, e);
            let sigma = (p * (1.0 - p) / n as f64).sqrt();
            assert!(
                (data.frequency(i, j, 0) - p).abs() <= 5.0 * sigma + 1e-9,
                "cell ({i},{j}) off the Born prediction"
            );
        }
    }
}

#[test]
fn unphysical_process_is_rejected() {
    // Trace-1 Hermitian but not trace preserving: fine as a matrix, not as
    // a channel.
    let mut m = nalgebra::Matrix4::zeros();
    m[(0, 0)] = c(1.0, 0.0);
    let not_a_channel = ChoiState::new(m).unwrap();
    let truth = ideal_parameter_set(Method::C, None).unwrap();
    assert!(matches!(
        sample_process(&truth, &not_a_channel, 100, 0),
        Err(Error::UnphysicalChoi)
    ));
}

#[test]
fn timeseries_requires_evolution_parameters() {
    let truth = ideal_parameter_set(Method::C, None).unwrap();
    assert!(matches!(
        sample_timeseries(&truth, &[0.0, 1.0], 100, 0),
        Err(Error::MissingEvolution { method: Method::C })
    ));
}

#[test]
fn zero_shots_are_rejected_everywhere() {
    let truth = ideal_parameter_set(Method::C, None).unwrap();
    assert!(matches!(sample_static(&truth, 0, 0), Err(Error::ZeroShots)));
    assert!(matches!(
        sample_process(&truth, &ChoiState::identity(), 0, 0),
        Err(Error::ZeroShots)
    ));
    let cfg = GroundTruthConfig::default();
    let truth_b = make_ground_truth(&cfg, Method::B).unwrap();
    assert!(matches!(
        sample_timeseries(&truth_b, &[0.0], 0, 0),
        Err(Error::ZeroShots)
    ));
}

#[test]
fn dataset_invariants_are_enforced() {
    // Count exceeding the shot number.
    assert!(matches!(
        CountDataset::new(DatasetLayout::Static, 1, 1, vec![], vec![11], 10),
        Err(Error::BadDataset { .. })
    ));
    // Wrong table size.
    assert!(matches!(
        CountDataset::new(DatasetLayout::Static, 2, 3, vec![], vec![0; 5], 10),
        Err(Error::BadDataset { .. })
    ));
    // Static data with a time grid, timeseries without one.
    assert!(matches!(
        CountDataset::new(DatasetLayout::Static, 1, 1, vec![0.0], vec![5], 10),
        Err(Error::BadDataset { .. })
    ));
    assert!(matches!(
        CountDataset::new(DatasetLayout::Timeseries, 1, 1, vec![], vec![5], 10),
        Err(Error::BadDataset { .. })
    ));
    // Negative time.
    assert!(matches!(
        CountDataset::new(DatasetLayout::Timeseries, 1, 1, vec![-1.0], vec![5], 10),
        Err(Error::BadDataset { .. })
    ));
    assert!(matches!(
        CountDataset::new(DatasetLayout::Static, 1, 1, vec![], vec![0], 0),
        Err(Error::ZeroShots)
    ));
}

#[test]
fn dataset_round_trips_and_rounds_probabilities() {
    let table = DMatrix::from_row_slice(2, 2, &[1.0, 0.6, 0.04999, 0.0]);
    let data = CountDataset::from_static_probabilities(&table, 10).unwrap();
    assert_eq!(data.count(0, 0, 0), 10);
    assert_eq!(data.count(0, 1, 0), 6);
    assert_eq!(data.count(1, 0, 0), 0);
    assert_abs_diff_eq!(data.frequency(0, 1, 0), 0.6, epsilon = 1e-15);

    let json = serde_json::to_string(&data).unwrap();
    let back: CountDataset = serde_json::from_str(&json).unwrap();
    assert_eq!(back, data);

    // Tampered documents fail revalidation.
    let bad = json.replace("\"shots\":10", "\"shots\":1");
    assert!(serde_json::from_str::<CountDataset>(&bad).is_err());
}

#[test]
fn derived_seeds_are_stable_and_distinct() {
    let s1 = seeds::derive_seed(42, &["data", "B", "1000", "0"]);
    assert_eq!(s1, seeds::derive_seed(42, &["data", "B", "1000", "0"]));
    assert_ne!(s1, seeds::derive_seed(43, &["data", "B", "1000", "0"]));
    assert_ne!(s1, seeds::derive_seed(42, &["data", "B", "1000", "1"]));
    // The separator keeps ["ab"] and ["a", "b"] apart.
    assert_ne!(
        seeds::derive_seed(0, &["ab"]),
        seeds::derive_seed(0, &["a", "b"])
    );
}
