//! Proximity matrices and the activity orders they induce.
//!
//! Row `i` of a proximity matrix holds the path lengths from neuron `i` to
//! every other neuron. Nothing beyond a zero diagonal and nonnegative entries
//! is assumed: the matrix may be asymmetric and need not satisfy the triangle
//! inequality. Activity started at neuron `k` reaches the others in ascending
//! order of row `k`, ties going to the lower label.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Validated `n x n` matrix of nonnegative distances with a zero diagonal.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ProximityRepr", into = "ProximityRepr")]
pub struct ProximityMatrix {
    n: usize,
    distances: Vec<f64>,
    symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProximityRepr {
    pub n: usize,
    pub rows: Vec<Vec<f64>>,
}

/// Checks the proximity invariants and returns the validated matrix.
pub fn validate_proximity(rows: &[Vec<f64>]) -> Result<ProximityMatrix> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyVector);
    }
    let mut distances = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: i + 1, len: row.len(), expected: n });
        }
        for (j, &d) in row.iter().enumerate() {
            if !d.is_finite() {
                return Err(Error::NonFiniteDistance { row: i + 1, col: j + 1 });
            }
            if d < 0.0 {
                return Err(Error::NegativeDistance { row: i + 1, col: j + 1, value: d });
            }
            if i == j && d != 0.0 {
                return Err(Error::NonzeroDiagonal { index: i + 1 });
            }
            // -0.0 and 0.0 must tie.
            distances.push(if d == 0.0 { 0.0 } else { d });
        }
    }
    let symmetric = (0..n).all(|i| (i + 1..n).all(|j| distances[i * n + j] == distances[j * n + i]));
    Ok(ProximityMatrix { n, distances, symmetric })
}

impl ProximityMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Distance from neuron `from` to neuron `to`, both 0-based.
    pub fn distance(&self, from: usize, to: usize) -> f64 {
        self.distances[from * self.n + to]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.distances.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    /// Activity order from the 1-based `start` label.
    pub fn activity_order(&self, start: usize) -> Result<ActivityOrder> {
        activity_order(self, start)
    }

    pub fn all_orders(&self) -> Vec<ActivityOrder> {
        all_orders(self)
    }
}

impl fmt::Debug for ProximityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProximityMatrix")
            .field("n", &self.n)
            .field("rows", &self.rows())
            .field("symmetric", &self.symmetric)
            .finish()
    }
}

impl TryFrom<ProximityRepr> for ProximityMatrix {
    type Error = Error;

    fn try_from(repr: ProximityRepr) -> Result<Self> {
        if repr.rows.len() != repr.n {
            return Err(Error::DimensionMismatch { expected: repr.n, found: repr.rows.len() });
        }
        validate_proximity(&repr.rows)
    }
}

impl From<ProximityMatrix> for ProximityRepr {
    fn from(p: ProximityMatrix) -> Self {
        ProximityRepr { n: p.n, rows: p.rows() }
    }
}

/// A permutation of the neurons whose first element is the starting neuron.
///
/// Stored 0-based; serialized and displayed as 1-based labels.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ActivityOrder(Vec<usize>);

impl ActivityOrder {
    /// Builds an order from 1-based labels.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        let mut seen = vec![false; n];
        let mut neurons = Vec::with_capacity(n);
        for &label in labels {
            if label == 0 || label > n {
                return Err(Error::NeuronOutOfRange { label, n });
            }
            if std::mem::replace(&mut seen[label - 1], true) {
                return Err(Error::InvalidOrder { n });
            }
            neurons.push(label - 1);
        }
        Ok(Self(neurons))
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        Ok(Self((0..n).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 0-based neuron index at each position.
    pub fn neurons(&self) -> &[usize] {
        &self.0
    }

    /// 1-based starting neuron label.
    pub fn start(&self) -> usize {
        self.0[0] + 1
    }

    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// 0-based position of each 0-based neuron within this order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (a, &neuron) in self.0.iter().enumerate() {
            pos[neuron] = a;
        }
        pos
    }

    /// True if `other` is a nontrivial cyclic rotation of this order.
    pub fn is_rotation_of(&self, other: &ActivityOrder) -> bool {
        let n = self.0.len();
        n == other.0.len() && (1..n).any(|shift| (0..n).all(|a| self.0[(a + shift) % n] == other.0[a]))
    }
}

impl TryFrom<Vec<usize>> for ActivityOrder {
    type Error = Error;

    fn try_from(labels: Vec<usize>) -> Result<Self> {
        Self::from_labels(&labels)
    }
}

impl From<ActivityOrder> for Vec<usize> {
    fn from(order: ActivityOrder) -> Self {
        order.labels()
    }
}

impl fmt::Debug for ActivityOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ActivityOrder({self})")
    }
}

impl fmt::Display for ActivityOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, &neuron) in self.0.iter().enumerate() {
            if a > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", neuron + 1)?;
        }
        Ok(())
    }
}

/// Neurons sorted by ascending distance from `start` (1-based), with the start
/// neuron first and ties broken by the lower label.
pub fn activity_order(p: &ProximityMatrix, start: usize) -> Result<ActivityOrder> {
    let n = p.n;
    if start == 0 || start > n {
        return Err(Error::NeuronOutOfRange { label: start, n });
    }
    let s = start - 1;
    let mut rest: Vec<usize> = (0..n).filter(|&j| j != s).collect();
    rest.sort_by(|&a, &b| p.distance(s, a).partial_cmp(&p.distance(s, b)).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
    let mut neurons = Vec::with_capacity(n);
    neurons.push(s);
    neurons.extend(rest);
    Ok(ActivityOrder(neurons))
}

/// One order per starting neuron; element `k` starts at neuron `k + 1`.
pub fn all_orders(p: &ProximityMatrix) -> Vec<ActivityOrder> {
    (1..=p.n).map(|k| activity_order(p, k).expect("label in range")).collect()
}
