//! Fragment-expansion recall through the lower-triangular B matrix.
//!
//! The weight matrix is first relabeled along an activity order, so that
//! position `a` refers to neuron `order[a]`. Its strictly lower triangle `B`
//! satisfies `T = B + B^t`. Recall clamps a seed on the leading positions and
//! then extends the fragment one position at a time: position `k` receives
//! `sgn(sum_{j<k} B[k][j] f[j])` and is fed back before position `k + 1` is
//! computed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{check_bipolar, flatten_square, nest_rows, sgn, BipolarVector, MatrixRepr, WeightMatrix};
use crate::proximity::ActivityOrder;

/// A weight matrix relabeled so that `entries[a][b] = T[order[a]][order[b]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutedWeightMatrix {
    pub weights: WeightMatrix,
    pub order: ActivityOrder,
}

impl PermutedWeightMatrix {
    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.weights.rows()
    }
}

pub fn permute_weights(t: &WeightMatrix, order: &ActivityOrder) -> Result<PermutedWeightMatrix> {
    let n = t.dim();
    t.check_dim(order.len())?;
    let idx = order.neurons();
    let mut entries = Vec::with_capacity(n * n);
    for &ra in idx {
        let row = t.row(ra);
        entries.extend(idx.iter().map(|&cb| row[cb]));
    }
    Ok(PermutedWeightMatrix { weights: WeightMatrix::from_parts_unchecked(n, entries), order: order.clone() })
}

/// Strictly lower-triangular integer matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct BMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl BMatrix {
    /// Takes the strictly lower triangle of a symmetric zero-diagonal matrix.
    pub fn from_weights(t: &WeightMatrix) -> Self {
        let n = t.dim();
        let mut entries = vec![0; n * n];
        for a in 0..n {
            entries[a * n..a * n + a].copy_from_slice(&t.row(a)[..a]);
        }
        Self { n, entries }
    }

    /// As [`BMatrix::from_weights`], for rows that still need checking.
    pub fn from_symmetric_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Ok(Self::from_weights(&WeightMatrix::from_rows(rows)?))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        nest_rows(self.n, &self.entries)
    }

    /// `B + B^t`.
    pub fn reconstruct(&self) -> WeightMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[a * n + b] = self.get(a, b) + self.get(b, a);
            }
        }
        WeightMatrix::from_parts_unchecked(n, entries)
    }
}

impl TryFrom<MatrixRepr> for BMatrix {
    type Error = Error;

    fn try_from(repr: MatrixRepr) -> Result<Self> {
        if repr.rows.len() != repr.n {
            return Err(Error::DimensionMismatch { expected: repr.n, found: repr.rows.len() });
        }
        let (n, entries) = flatten_square(&repr.rows)?;
        for a in 0..n {
            for b in a..n {
                if entries[a * n + b] != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "B matrix entry ({}, {}) above the subdiagonal is nonzero",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(Self { n, entries })
    }
}

impl From<BMatrix> for MatrixRepr {
    fn from(b: BMatrix) -> Self {
        MatrixRepr { n: b.n, rows: b.rows() }
    }
}

pub fn lower_triangular(tp: &PermutedWeightMatrix) -> BMatrix {
    BMatrix::from_weights(&tp.weights)
}

/// One update of the fragment: the bit emitted at `position` (1-based, in
/// order coordinates) for neuron `neuron` (1-based label).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecallStep {
    pub position: usize,
    pub neuron: usize,
    pub net_input: i64,
    pub bit: i8,
    pub zero_input: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecallTrace {
    pub order: ActivityOrder,
    pub seed_length: usize,
    pub steps: Vec<RecallStep>,
    /// `fragments[0]` is the clamped seed; each later entry is one bit longer.
    pub fragments: Vec<Vec<i8>>,
}

impl RecallTrace {
    pub fn has_zero_input(&self) -> bool {
        self.steps.iter().any(|s| s.zero_input)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecallResult {
    /// Bits indexed by position in the activity order.
    pub ordered_bits: BipolarVector,
    /// Bits indexed by neuron label.
    pub normative_bits: BipolarVector,
    pub trace: RecallTrace,
}

/// Runs one forward pass of fragment expansion.
///
/// `seed` is clamped on the first `seed.len()` positions of `order` and never
/// modified. Every remaining position is filled exactly once.
pub fn recall(t: &WeightMatrix, order: &ActivityOrder, seed: &[i8]) -> Result<RecallResult> {
    let n = t.dim();
    if seed.is_empty() {
        return Err(Error::EmptySeed);
    }
    if seed.len() > n {
        return Err(Error::SeedTooLong { len: seed.len(), n });
    }
    check_bipolar(seed)?;
    let b = lower_triangular(&permute_weights(t, order)?);

    let mut fragment = seed.to_vec();
    let mut steps = Vec::with_capacity(n - seed.len());
    let mut fragments = Vec::with_capacity(n - seed.len() + 1);
    fragments.push(fragment.clone());
    for k in seed.len()..n {
        let net_input: i64 = fragment.iter().enumerate().map(|(j, &f)| b.get(k, j) * f as i64).sum();
        let bit = sgn(net_input);
        fragment.push(bit);
        steps.push(RecallStep {
            position: k + 1,
            neuron: order.neurons()[k] + 1,
            net_input,
            bit,
            zero_input: net_input == 0,
        });
        fragments.push(fragment.clone());
    }

    let ordered_bits = BipolarVector::new(fragment)?;
    let normative_bits = map_to_normative(&ordered_bits, order)?;
    Ok(RecallResult {
        ordered_bits,
        normative_bits,
        trace: RecallTrace { order: order.clone(), seed_length: seed.len(), steps, fragments },
    })
}

/// Relabels bits from order positions back to neuron labels:
/// `result[order[a]] = ordered[a]`.
pub fn map_to_normative(ordered: &BipolarVector, order: &ActivityOrder) -> Result<BipolarVector> {
    if ordered.len() != order.len() {
        return Err(Error::DimensionMismatch { expected: order.len(), found: ordered.len() });
    }
    let mut out = vec![0i8; ordered.len()];
    for (a, &neuron) in order.neurons().iter().enumerate() {
        out[neuron] = ordered[a];
    }
    BipolarVector::new(out)
}

/// Inverse of [`map_to_normative`]: `result[a] = normative[order[a]]`.
pub fn map_to_ordered(normative: &BipolarVector, order: &ActivityOrder) -> Result<BipolarVector> {
    if normative.len() != order.len() {
        return Err(Error::DimensionMismatch { expected: order.len(), found: normative.len() });
    }
    BipolarVector::new(order.neurons().iter().map(|&i| normative[i]).collect())
}
