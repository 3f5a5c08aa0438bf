//! Network-level studies: outcome classification, exhaustive fixed-point
//! census, the per-neuron memory map and Monte-Carlo capacity sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{train_hebbian, BipolarVector, MemorySet, WeightMatrix};
use crate::proximity::{ActivityOrder, ProximityMatrix};
use crate::recall::{recall, RecallResult};

/// Largest network scanned exhaustively unless the caller raises it.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// Kind assigned to a vector relative to a trained memory set. Memory
/// indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "memory", rename_all = "kebab-case")]
pub enum OutcomeKind {
    StoredMemory(usize),
    ComplementOf(usize),
    SpuriousFixedPoint,
    NonFixedPoint,
}

impl OutcomeKind {
    pub fn label(&self) -> String {
        match self {
            OutcomeKind::StoredMemory(i) => format!("memory #{i}"),
            OutcomeKind::ComplementOf(i) => format!("complement of memory #{i}"),
            OutcomeKind::SpuriousFixedPoint => "spurious fixed point".to_string(),
            OutcomeKind::NonFixedPoint => "not a fixed point".to_string(),
        }
    }
}

/// A classified vector.
///
/// `kind` names memories and complements by identity; whether the vector
/// actually satisfies `x = sgn(T x)` is carried separately in `fixed_point`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecallOutcome {
    pub kind: OutcomeKind,
    pub fixed_point: bool,
    pub vector: BipolarVector,
}

/// Precedence: stored memory, then complement, then spurious fixed point,
/// then non-fixed point. The lowest matching memory index wins.
pub fn classify(vector: &BipolarVector, memories: &[BipolarVector], t: &WeightMatrix) -> Result<RecallOutcome> {
    let fixed_point = t.is_stored(vector)?;
    if let Some(bad) = memories.iter().find(|m| m.len() != vector.len()) {
        return Err(Error::DimensionMismatch { expected: vector.len(), found: bad.len() });
    }
    Ok(classify_unchecked(vector.clone(), fixed_point, memories))
}

fn classify_unchecked(vector: BipolarVector, fixed_point: bool, memories: &[BipolarVector]) -> RecallOutcome {
    let kind = if let Some(i) = memories.iter().position(|m| *m == vector) {
        OutcomeKind::StoredMemory(i + 1)
    } else if let Some(i) = memories.iter().position(|m| m.iter().zip(vector.iter()).all(|(a, b)| *a == -*b)) {
        OutcomeKind::ComplementOf(i + 1)
    } else if fixed_point {
        OutcomeKind::SpuriousFixedPoint
    } else {
        OutcomeKind::NonFixedPoint
    };
    RecallOutcome { kind, fixed_point, vector }
}

pub fn enumerate_fixed_points(t: &WeightMatrix, memories: &[BipolarVector]) -> Result<Vec<RecallOutcome>> {
    enumerate_fixed_points_with_limit(t, memories, DEFAULT_ENUMERATION_LIMIT)
}

/// Scans all `2^n` bipolar vectors and returns every fixed point, classified,
/// in enumeration order (see [`BipolarVector::from_index`]).
pub fn enumerate_fixed_points_with_limit(
    t: &WeightMatrix,
    memories: &[BipolarVector],
    limit: usize,
) -> Result<Vec<RecallOutcome>> {
    let n = t.dim();
    // u64 indexing caps the scan regardless of the configured limit.
    let limit = limit.min(63);
    if n > limit {
        return Err(Error::EnumerationLimit { n, limit });
    }
    if let Some(bad) = memories.iter().find(|m| m.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
    }
    let hits: Vec<u64> = (0..1u64 << n)
        .into_par_iter()
        .map_init(
            || vec![0i8; n],
            |buf, idx| {
                for (j, b) in buf.iter_mut().enumerate() {
                    *b = if idx >> j & 1 == 1 { -1 } else { 1 };
                }
                t.is_fixed_point_unchecked(buf).then_some(idx)
            },
        )
        .flatten()
        .collect();
    Ok(hits.into_iter().map(|idx| classify_unchecked(BipolarVector::from_index(n, idx), true, memories)).collect())
}

/// Tally of a census by outcome kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub stored_memory: usize,
    pub complement: usize,
    pub spurious: usize,
    pub non_fixed_point: usize,
}

impl CensusCounts {
    pub fn of(outcomes: &[RecallOutcome]) -> Self {
        let mut c = Self::default();
        for o in outcomes {
            match o.kind {
                OutcomeKind::StoredMemory(_) => c.stored_memory += 1,
                OutcomeKind::ComplementOf(_) => c.complement += 1,
                OutcomeKind::SpuriousFixedPoint => c.spurious += 1,
                OutcomeKind::NonFixedPoint => c.non_fixed_point += 1,
            }
        }
        c
    }

    pub fn total(&self) -> usize {
        self.stored_memory + self.complement + self.spurious + self.non_fixed_point
    }
}

/// Seed polarities to try at every starting neuron.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    #[default]
    Both,
    Positive,
    Negative,
}

impl Polarity {
    pub fn seeds(self) -> &'static [i8] {
        match self {
            Polarity::Both => &[1, -1],
            Polarity::Positive => &[1],
            Polarity::Negative => &[-1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntry {
    /// 1-based starting neuron.
    pub neuron: usize,
    pub order: ActivityOrder,
    pub seed: i8,
    pub result: RecallResult,
    pub outcome: RecallOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeuronMemoryMap {
    pub entries: Vec<MapEntry>,
}

impl NeuronMemoryMap {
    pub fn get(&self, neuron: usize, seed: i8) -> Option<&MapEntry> {
        self.entries.iter().find(|e| e.neuron == neuron && e.seed == seed)
    }
}

/// Recalls from every neuron with a single-bit seed of each requested
/// polarity, following that neuron's activity order.
pub fn neuron_memory_map(
    t: &WeightMatrix,
    p: &ProximityMatrix,
    memories: &[BipolarVector],
    polarity: Polarity,
) -> Result<NeuronMemoryMap> {
    let n = t.dim();
    if p.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
    }
    let mut entries = Vec::with_capacity(n * polarity.seeds().len());
    for (k, order) in p.all_orders().into_iter().enumerate() {
        for &seed in polarity.seeds() {
            let result = recall(t, &order, &[seed])?;
            let outcome = classify(&result.normative_bits, memories, t)?;
            entries.push(MapEntry { neuron: k + 1, order: order.clone(), seed, result, outcome });
        }
    }
    Ok(NeuronMemoryMap { entries })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CapacityRow {
    pub m: usize,
    pub trials: usize,
    /// Trials in which every one of the `m` memories was a fixed point.
    pub all_stored_trials: usize,
    /// Individual memories that were fixed points, over all trials.
    pub stored_memories: usize,
    pub all_stored_fraction: f64,
    pub per_memory_stored_fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub n: usize,
    pub trials: usize,
    pub rng_seed: u64,
    pub rows: Vec<CapacityRow>,
}

impl CapacityReport {
    pub fn row(&self, m: usize) -> Option<&CapacityRow> {
        self.rows.iter().find(|r| r.m == m)
    }
}

/// RNG for one trial. Streams depend only on `(rng_seed, m, trial)`, so the
/// report does not depend on how trials are scheduled across threads.
pub fn trial_rng(rng_seed: u64, m: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rng.set_stream(((m as u64) << 32) | trial as u64);
    rng
}

/// Draws `m` i.i.d. uniform bipolar vectors of length `n`.
pub fn random_memories<R: Rng>(rng: &mut R, n: usize, m: usize) -> MemorySet {
    let memories = (0..m)
        .map(|_| {
            let bits = (0..n).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
            BipolarVector::new(bits).expect("nonempty bipolar")
        })
        .collect();
    MemorySet::new(memories).expect("m >= 1")
}

/// For each `m`, trains `trials` random memory sets of size `m` on `n`
/// neurons and records how often they are stored.
pub fn capacity_sweep(n: usize, m_values: &[usize], trials: usize, rng_seed: u64) -> Result<CapacityReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if m_values.contains(&0) {
        return Err(Error::InvalidParameter("memory counts must be at least 1".into()));
    }
    let mut ms = m_values.to_vec();
    ms.sort_unstable();
    ms.dedup();

    let rows = ms
        .into_iter()
        .map(|m| {
            let (all, each) = (0..trials)
                .into_par_iter()
                .map(|trial| {
                    let mems = random_memories(&mut trial_rng(rng_seed, m, trial), n, m);
                    let t = train_hebbian(&mems);
                    let stored = mems.iter().filter(|x| t.is_fixed_point_unchecked(x)).count();
                    (usize::from(stored == m), stored)
                })
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            CapacityRow {
                m,
                trials,
                all_stored_trials: all,
                stored_memories: each,
                all_stored_fraction: all as f64 / trials as f64,
                per_memory_stored_fraction: each as f64 / (trials * m) as f64,
            }
        })
        .collect();
    Ok(CapacityReport { n, trials, rng_seed, rows })
}
