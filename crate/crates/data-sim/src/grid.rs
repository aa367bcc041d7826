//! Time grids for free-evolution data.

/// Default number of time points.
pub const DEFAULT_TIME_POINTS: usize = 50;

/// `m` equally spaced points covering [0, t_max], endpoints included.
pub fn time_grid(t_max: f64, m: usize) -> Vec<f64> {
    assert!(m >= 2, "a grid needs at least two points");
    assert!(t_max > 0.0, "grid range must be positive");
    (0..m).map(|k| t_max * k as f64 / (m - 1) as f64).collect()
}

/// The default grid spans two decay times with [`DEFAULT_TIME_POINTS`]
/// points, long enough that the envelope decays to e⁻² and the oscillation
/// amplitude information is exhausted.
pub fn default_time_grid(t2: f64) -> Vec<f64> {
    time_grid(2.0 * t2, DEFAULT_TIME_POINTS)
}
