//! Hebbian associative memory with proximity-ordered recall.
//!
//! A network of `n` bipolar neurons is trained with the outer-product rule.
//! A proximity matrix fixes, for every starting neuron, the order in which
//! activity spreads. Recall clamps a bit on the starting neuron and grows the
//! fragment one neuron at a time through the strictly lower-triangular half
//! `B` of the reordered weight matrix, so different starting neurons can
//! retrieve different memories.
//!
//! ```
//! use proxrecall_core::{recall, train_hebbian, validate_proximity, BipolarVector, MemorySet};
//!
//! let memories = MemorySet::new(vec![
//!     BipolarVector::from_ints(&[1, 1, 1])?,
//!     BipolarVector::from_ints(&[1, -1, -1])?,
//! ])?;
//! let t = train_hebbian(&memories);
//! let p = validate_proximity(&[
//!     vec![0.0, 1.0, 2.0],
//!     vec![1.0, 0.0, 1.0],
//!     vec![2.0, 1.0, 0.0],
//! ])?;
//! let result = recall(&t, &p.activity_order(1)?, &[1])?;
//! assert_eq!(result.normative_bits.len(), 3);
//! # Ok::<(), proxrecall_core::Error>(())
//! ```

pub mod analysis;
pub mod error;
pub mod model;
pub mod proximity;
pub mod recall;

pub use analysis::{
    capacity_sweep, classify, enumerate_fixed_points, enumerate_fixed_points_with_limit, neuron_memory_map,
    CapacityReport, CapacityRow, CensusCounts, MapEntry, NeuronMemoryMap, OutcomeKind, Polarity, RecallOutcome,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use error::{Error, Result};
pub use model::{sgn, train_hebbian, train_hebbian_from, BipolarVector, MemorySet, WeightMatrix};
pub use proximity::{activity_order, all_orders, validate_proximity, ActivityOrder, ProximityMatrix};
pub use recall::{
    lower_triangular, map_to_normative, map_to_ordered, permute_weights, recall, BMatrix, PermutedWeightMatrix,
    RecallResult, RecallStep, RecallTrace,
};
