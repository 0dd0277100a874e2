//! Benchmark fixtures.

use coophunt::ParamSet;

/// Stable cycle after a supercritical Hopf bifurcation.
pub fn single_cycle() -> ParamSet {
    ParamSet::new(54.902, 0.8, 0.68, 0.5).unwrap()
}

/// Unstable focus with a stable cycle, below the homoclinic curve.
pub fn region_three() -> ParamSet {
    ParamSet::new(18.0, 1.2, 0.35, 0.5).unwrap()
}

/// A small grid across the fold curve.
pub fn fold_grid() -> Vec<ParamSet> {
    (0..16)
        .flat_map(|i| (0..16).map(move |j| ParamSet::new(15.0 + 0.4 * i as f64, 1.2, 0.25 + 0.01 * j as f64, 0.5).unwrap()))
        .collect()
}
