//! Bipolar state vectors, Hebbian training and the fixed-point storage test.

use std::fmt;
use std::ops::{Deref, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Threshold used throughout the model: `+1` for `x >= 0`, `-1` otherwise.
///
/// Zero maps to `+1`. This is what makes a stored memory's complement fail
/// to be stored whenever some net input is exactly zero.
#[inline]
pub fn sgn(x: i64) -> i8 {
    if x >= 0 {
        1
    } else {
        -1
    }
}

/// A neuron state or memory: every entry is `+1` or `-1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct BipolarVector(Vec<i8>);

impl BipolarVector {
    pub fn new(bits: Vec<i8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyVector);
        }
        check_bipolar(&bits)?;
        Ok(Self(bits))
    }

    /// Accepts any integer slice, rejecting values other than `+1`/`-1`.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyVector);
        }
        let mut bits = Vec::with_capacity(values.len());
        for (i, &v) in values.iter().enumerate() {
            match v {
                1 => bits.push(1),
                -1 => bits.push(-1),
                _ => return Err(Error::NotBipolar { position: i + 1, value: v }),
            }
        }
        Ok(Self(bits))
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    /// The `index`-th vector of `{+1,-1}^n` in enumeration order: bit `j`
    /// of `index` set means entry `j` is `-1`. Index 0 is all `+1`.
    pub fn from_index(n: usize, index: u64) -> Self {
        debug_assert!((1..=64).contains(&n));
        Self((0..n).map(|j| if index >> j & 1 == 1 { -1 } else { 1 }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> &[i8] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<i8> {
        self.0
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|&b| -b).collect())
    }
}

impl Neg for &BipolarVector {
    type Output = BipolarVector;

    fn neg(self) -> BipolarVector {
        self.complement()
    }
}

impl Deref for BipolarVector {
    type Target = [i8];

    fn deref(&self) -> &[i8] {
        &self.0
    }
}

impl TryFrom<Vec<i8>> for BipolarVector {
    type Error = Error;

    fn try_from(bits: Vec<i8>) -> Result<Self> {
        Self::new(bits)
    }
}

impl From<BipolarVector> for Vec<i8> {
    fn from(v: BipolarVector) -> Self {
        v.0
    }
}

impl fmt::Debug for BipolarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipolarVector({self})")
    }
}

impl fmt::Display for BipolarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_bipolar(bits: &[i8]) -> Result<()> {
    match bits.iter().position(|&b| b != 1 && b != -1) {
        Some(i) => Err(Error::NotBipolar { position: i + 1, value: bits[i] as i64 }),
        None => Ok(()),
    }
}

/// A nonempty list of memories sharing one dimension. Duplicates are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<BipolarVector>", into = "Vec<BipolarVector>")]
pub struct MemorySet(Vec<BipolarVector>);

impl MemorySet {
    pub fn new(memories: Vec<BipolarVector>) -> Result<Self> {
        let first = memories.first().ok_or(Error::EmptyMemorySet)?;
        let n = first.len();
        if let Some(bad) = memories.iter().find(|m| m.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(Self(memories))
    }

    /// Neuron count shared by every memory.
    pub fn dim(&self) -> usize {
        self.0[0].len()
    }

    pub fn memories(&self) -> &[BipolarVector] {
        &self.0
    }
}

impl Deref for MemorySet {
    type Target = [BipolarVector];

    fn deref(&self) -> &[BipolarVector] {
        &self.0
    }
}

impl TryFrom<Vec<BipolarVector>> for MemorySet {
    type Error = Error;

    fn try_from(memories: Vec<BipolarVector>) -> Result<Self> {
        Self::new(memories)
    }
}

impl From<MemorySet> for Vec<BipolarVector> {
    fn from(set: MemorySet) -> Self {
        set.0
    }
}

/// Square integer matrix stored row-major. Serialized as an explicit
/// dimension plus nested rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct MatrixRepr {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

pub(crate) fn flatten_square(rows: &[Vec<i64>]) -> Result<(usize, Vec<i64>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyVector);
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: i + 1, len: row.len(), expected: n });
        }
        entries.extend_from_slice(row);
    }
    Ok((n, entries))
}

pub(crate) fn nest_rows(n: usize, entries: &[i64]) -> Vec<Vec<i64>> {
    entries.chunks(n).map(<[i64]>::to_vec).collect()
}

/// Symmetric, zero-diagonal integer interconnection matrix.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct WeightMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl WeightMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        Ok(Self { n, entries: vec![0; n * n] })
    }

    /// Builds a weight matrix from explicit rows, checking symmetry and the
    /// zero diagonal.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let (n, entries) = flatten_square(rows)?;
        let w = Self { n, entries };
        w.validate()?;
        Ok(w)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if self.get(i, i) != 0 {
                return Err(Error::NonzeroDiagonal { index: i + 1 });
            }
            for j in (i + 1)..n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.n + col]
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        nest_rows(self.n, &self.entries)
    }

    /// `T x` as exact integers.
    pub fn net_inputs(&self, x: &[i8]) -> Result<Vec<i64>> {
        self.check_dim(x.len())?;
        Ok((0..self.n).map(|i| dot(self.row(i), x)).collect())
    }

    /// True iff `x` is a fixed point: `sgn(T x)[i] == x[i]` for every `i`.
    pub fn is_stored(&self, x: &BipolarVector) -> Result<bool> {
        self.check_dim(x.len())?;
        Ok(self.is_fixed_point_unchecked(x))
    }

    pub(crate) fn is_fixed_point_unchecked(&self, x: &[i8]) -> bool {
        (0..self.n).all(|i| sgn(dot(self.row(i), x)) == x[i])
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found });
        }
        Ok(())
    }

    pub(crate) fn from_parts_unchecked(n: usize, entries: Vec<i64>) -> Self {
        Self { n, entries }
    }
}

#[inline]
pub(crate) fn dot(row: &[i64], x: &[i8]) -> i64 {
    row.iter().zip(x).map(|(&w, &b)| w * b as i64).sum()
}

impl fmt::Debug for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightMatrix").field("n", &self.n).field("rows", &self.rows()).finish()
    }
}

impl TryFrom<MatrixRepr> for WeightMatrix {
    type Error = Error;

    fn try_from(repr: MatrixRepr) -> Result<Self> {
        if repr.rows.len() != repr.n {
            return Err(Error::DimensionMismatch { expected: repr.n, found: repr.rows.len() });
        }
        Self::from_rows(&repr.rows)
    }
}

impl From<WeightMatrix> for MatrixRepr {
    fn from(w: WeightMatrix) -> Self {
        MatrixRepr { n: w.n, rows: w.rows() }
    }
}

/// Hebbian outer-product rule: `T[i][j] = sum_k x_k[i] x_k[j]` for `i != j`,
/// with the diagonal held at zero.
pub fn train_hebbian(memories: &MemorySet) -> WeightMatrix {
    let n = memories.dim();
    let mut entries = vec![0i64; n * n];
    for x in memories.iter() {
        for i in 0..n {
            let xi = x[i] as i64;
            let row = &mut entries[i * n..(i + 1) * n];
            for (j, w) in row.iter_mut().enumerate() {
                if j != i {
                    *w += xi * x[j] as i64;
                }
            }
        }
    }
    WeightMatrix::from_parts_unchecked(n, entries)
}

/// Convenience wrapper over a raw list of memories.
pub fn train_hebbian_from(memories: Vec<BipolarVector>) -> Result<WeightMatrix> {
    Ok(train_hebbian(&MemorySet::new(memories)?))
}
