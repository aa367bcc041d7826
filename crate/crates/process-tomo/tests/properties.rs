//! Structural invariants checked over randomized ensembles.

mod common;

use process_tomo::{
    constraints, linear_invert, mle_project, CholeskyParams, PauliTransferMatrix,
    ProjectionBudget,
};
use qubit_core::ChoiState;
use spam_model::{ideal_parameter_set, realize, Method};

#[test]
fn inversion_inverts_forward_evaluation() {
    let states = common::axis_states();
    let effects = common::axis_effects();
    let mut r = common::rng(11);
    for _ in 0..100 {
        let truth = common::random_cptp_choi(&mut r);
        let p = common::cell_probabilities(&truth, &states, &effects);
        let est = linear_invert(&p, &states, &effects).unwrap();
        let d = common::frobenius_distance(&est, &truth);
        assert!(d < 1e-8, "axis set round trip off by {d:.3e}");
    }

    // The same holds through an overcomplete five-by-five tilted set.
    let set = ideal_parameter_set(Method::C, None).unwrap();
    let (c_states, c_effects) = realize(&set).unwrap();
    for _ in 0..20 {
        let truth = common::random_cptp_choi(&mut r);
        let p = common::cell_probabilities(&truth, &c_states, &c_effects);
        let est = linear_invert(&p, &c_states, &c_effects).unwrap();
        let d = common::frobenius_distance(&est, &truth);
        assert!(d < 1e-8, "tilted set round trip off by {d:.3e}");
    }
}

#[test]
fn transfer_matrix_round_trips() {
    let mut r = common::rng(12);
    for _ in 0..100 {
        let rho = common::random_cptp_choi(&mut r);
        let ptm = PauliTransferMatrix::from_choi(&rho).unwrap();
        let back = ptm.to_choi();
        assert!(common::frobenius_distance(&back, &rho) < 1e-10);

        let ptm2 = PauliTransferMatrix::from_choi(&back).unwrap();
        assert!((ptm2.matrix() - ptm.matrix()).abs().max() < 1e-12);
    }

    // Free entries need not describe a physical map for the round trip.
    for _ in 0..100 {
        let mut free = [0.0; 12];
        for f in free.iter_mut() {
            *f = 2.0 * common::gaussian(&mut r);
        }
        let ptm = PauliTransferMatrix::from_free(&free);
        let back = PauliTransferMatrix::from_choi(&ptm.to_choi()).unwrap();
        assert!((back.matrix() - ptm.matrix()).abs().max() < 1e-12);
    }
}

#[test]
fn factor_parametrization_stays_physical() {
    let mut r = common::rng(13);
    for _ in 0..100 {
        let mut t = [0.0; 16];
        for v in t.iter_mut() {
            *v = common::gaussian(&mut r);
        }
        let rho = CholeskyParams::new(t).density().unwrap();
        assert!(rho.min_eigenvalue() > -1e-12);
        let trace: f64 = (0..4).map(|k| rho.matrix()[(k, k)].re).sum();
        assert!((trace - 1.0).abs() < 1e-12);

        // The factorization of the density reproduces the density.
        let again = CholeskyParams::from_choi(&rho).density().unwrap();
        assert!(common::trace_distance(&again, &rho) < 1e-8);
    }
}

#[test]
fn projection_is_idempotent_on_physical_states() {
    let budget = ProjectionBudget::default();
    let mut r = common::rng(14);
    for _ in 0..30 {
        let x = common::random_cptp_choi(&mut r);
        let once = mle_project(&x, 1e4, &budget).unwrap();
        let twice = mle_project(&once.choi, 1e4, &budget).unwrap();
        assert!(common::trace_distance(&once.choi, &x) < 1e-6);
        let d = common::trace_distance(&once.choi, &twice.choi);
        assert!(d < 1e-6, "second projection moved the state by {d:.3e}");
    }
}

#[test]
fn reprojection_drift_stays_at_the_feasibility_scale() {
    // A repaired state is positive but carries a small trace-preservation
    // residual, so a second projection may slide it along the constraint
    // valley; the move is bounded by the residual scale, not by zero.
    let budget = ProjectionBudget::default();
    let mut r = common::rng(18);
    for _ in 0..10 {
        let x = common::tp_unphysical(&mut r, 0.05);
        let once = mle_project(&x, 1e4, &budget).unwrap();
        let twice = mle_project(&once.choi, 1e4, &budget).unwrap();
        let d = common::trace_distance(&once.choi, &twice.choi);
        assert!(d < 1e-3, "re-projection drift {d:.3e}");
    }
}

#[test]
fn projection_output_is_positive() {
    let budget = ProjectionBudget::default();
    let mut r = common::rng(15);
    for k in 0..100 {
        let dip = [0.01, 0.05, 0.2][k % 3];
        let x = common::tp_unphysical(&mut r, dip);
        let fit = mle_project(&x, 1e4, &budget).unwrap();
        assert!(
            fit.choi.min_eigenvalue() >= -1e-8,
            "negative output eigenvalue {:.3e}",
            fit.choi.min_eigenvalue()
        );
        assert_eq!(fit.multipliers.iteration(), budget.outer_iterations);
    }
}

#[test]
fn reported_residual_matches_endpoint() {
    let budget = ProjectionBudget::default();
    let mut r = common::rng(16);
    for _ in 0..10 {
        let x = common::tp_unphysical(&mut r, 0.05);
        let fit = mle_project(&x, 1e4, &budget).unwrap();
        let c = constraints(&fit.params).unwrap();
        let recomputed = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!((fit.constraint_residual - recomputed).abs() < 1e-15);
    }
}

#[test]
fn projection_is_deterministic() {
    let budget = ProjectionBudget::default();
    let mut r = common::rng(17);
    let x = common::tp_unphysical(&mut r, 0.05);
    let a = mle_project(&x, 1e4, &budget).unwrap();
    let b = mle_project(&x, 1e4, &budget).unwrap();
    assert_eq!(a.choi.matrix(), b.choi.matrix());
    assert_eq!(a.objective, b.objective);
    assert_eq!(a.n_evaluations, b.n_evaluations);
    assert_eq!(a.converged, b.converged);
}

#[test]
fn pipeline_estimates_stay_physical() {
    // Inversion output is trace preserving by construction; after the
    // projection the estimate is also positive, whatever the noise level.
    let states = common::axis_states();
    let effects = common::axis_effects();
    let ev = qubit_core::EvolutionParams::new(1.0, 1e3).unwrap();
    let truth = process_tomo::hadamard_truth(&ev).unwrap();
    let p = common::cell_probabilities(&truth, &states, &effects);
    let budget = ProjectionBudget::default();
    for seed in 0..20u64 {
        let mut r = common::rng(300 + seed);
        let freqs = common::sampled_frequencies(&p, 10_000, &mut r);
        let est = linear_invert(&freqs, &states, &effects).unwrap();
        assert!(est.trace_preservation_deviation() < 1e-10);
        let fit = mle_project(&est, 1e4, &budget).unwrap();
        assert!(fit.choi.min_eigenvalue() >= -1e-8);
        assert!(fit.choi.trace_preservation_deviation() <= 4.0 * fit.constraint_residual + 1e-12);
    }
}
