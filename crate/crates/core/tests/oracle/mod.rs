//! Reference implementations used only by tests.
//!
//! Everything here works on plain `Vec<i64>` / `Vec<f64>` and shares no code
//! with the library, so agreement between the two is meaningful.
#![allow(dead_code, clippy::needless_range_loop)]

pub fn sign(x: i64) -> i64 {
    if x < 0 {
        -1
    } else {
        1
    }
}

/// Outer-product sum with the diagonal removed afterwards.
pub fn hebbian(memories: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = memories[0].len();
    let mut t = vec![vec![0i64; n]; n];
    for x in memories {
        for i in 0..n {
            for j in 0..n {
                t[i][j] += x[i] * x[j];
            }
        }
    }
    for (i, row) in t.iter_mut().enumerate() {
        row[i] = 0;
    }
    t
}

pub fn mat_vec(t: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    t.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn is_fixed_point(t: &[Vec<i64>], x: &[i64]) -> bool {
    mat_vec(t, x).into_iter().map(sign).eq(x.iter().copied())
}

/// Every `x` in `{+1,-1}^n` with `sgn(T x) = x`, built recursively.
pub fn fixed_point_scan(t: &[Vec<i64>]) -> Vec<Vec<i64>> {
    fn go(t: &[Vec<i64>], prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == t.len() {
            if is_fixed_point(t, prefix) {
                out.push(prefix.clone());
            }
            return;
        }
        for b in [1, -1] {
            prefix.push(b);
            go(t, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Output of [`step_by_step_recall`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRecall {
    pub ordered: Vec<i64>,
    pub normative: Vec<i64>,
    pub nets: Vec<i64>,
}

/// Hand-executable fragment expansion. `order` holds 1-based labels.
///
/// Builds the relabeled matrix element by element, keeps only entries left
/// of the diagonal, and extends the fragment one neuron at a time.
pub fn step_by_step_recall(t: &[Vec<i64>], order: &[usize], seed: &[i64]) -> OracleRecall {
    let n = t.len();
    let mut relabeled = vec![vec![0i64; n]; n];
    for a in 0..n {
        for b in 0..n {
            relabeled[a][b] = t[order[a] - 1][order[b] - 1];
        }
    }
    let mut fragment = seed.to_vec();
    let mut nets = Vec::new();
    while fragment.len() < n {
        let k = fragment.len();
        let mut net = 0;
        for j in 0..k {
            net += relabeled[k][j] * fragment[j];
        }
        nets.push(net);
        fragment.push(sign(net));
    }
    let mut normative = vec![0i64; n];
    for a in 0..n {
        normative[order[a] - 1] = fragment[a];
    }
    OracleRecall { ordered: fragment, normative, nets }
}

/// Relabeled matrix `T[order[a]][order[b]]`, 1-based `order`.
pub fn relabel(t: &[Vec<i64>], order: &[usize]) -> Vec<Vec<i64>> {
    order.iter().map(|&ra| order.iter().map(|&cb| t[ra - 1][cb - 1]).collect()).collect()
}

/// Selection-style ordering: repeatedly take the closest unvisited neuron
/// from `start`, lower label on ties. 1-based labels in and out.
pub fn nearest_first(p: &[Vec<f64>], start: usize) -> Vec<usize> {
    let n = p.len();
    let mut visited = vec![false; n];
    let mut out = vec![start];
    visited[start - 1] = true;
    while out.len() < n {
        let mut best: Option<usize> = None;
        for j in 0..n {
            if visited[j] {
                continue;
            }
            best = match best {
                Some(b) if p[start - 1][b] <= p[start - 1][j] => Some(b),
                _ => Some(j),
            };
        }
        let b = best.unwrap();
        visited[b] = true;
        out.push(b + 1);
    }
    out
}

pub fn five_memories() -> Vec<Vec<i64>> {
    vec![vec![1, 1, 1, 1, 1], vec![1, -1, -1, -1, 1], vec![1, 1, -1, -1, -1]]
}

pub fn five_weights() -> Vec<Vec<i64>> {
    vec![vec![0, 1, -1, -1, 1], vec![1, 0, 1, 1, -1], vec![-1, 1, 0, 3, 1], vec![-1, 1, 3, 0, 1], vec![1, -1, 1, 1, 0]]
}

pub fn four_proximity() -> Vec<Vec<f64>> {
    vec![vec![0.0, 1.0, 2.0, 4.0], vec![1.0, 0.0, 1.5, 2.0], vec![2.0, 1.5, 0.0, 3.0], vec![4.0, 2.0, 3.0, 0.0]]
}

pub fn five_proximity() -> Vec<Vec<f64>> {
    vec![
        vec![0.0, 1.0, 2.5, 4.0, 7.0],
        vec![1.0, 0.0, 2.0, 4.5, 3.0],
        vec![2.5, 2.0, 0.0, 1.0, 6.0],
        vec![4.0, 4.5, 1.0, 0.0, 5.0],
        vec![7.0, 3.0, 6.0, 5.0, 0.0],
    ]
}
