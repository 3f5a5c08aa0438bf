//! Shared fixtures for the criterion benchmarks in `benches/`.

use proxrecall_core::analysis::{random_memories, trial_rng};
use proxrecall_core::{validate_proximity, MemorySet, ProximityMatrix};

/// Reproducible random memory set.
pub fn memories(n: usize, m: usize, seed: u64) -> MemorySet {
    random_memories(&mut trial_rng(seed, m, 0), n, m)
}

/// Neurons on a line, distance `|i - j|`.
pub fn line_proximity(n: usize) -> ProximityMatrix {
    let rows: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| i.abs_diff(j) as f64).collect()).collect();
    validate_proximity(&rows).expect("valid line distances")
}
