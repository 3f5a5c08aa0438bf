mod oracle;

use proptest::prelude::*;
use proxrecall_core::{
    enumerate_fixed_points, neuron_memory_map, permute_weights, recall, train_hebbian, validate_proximity,
    ActivityOrder, BipolarVector, MemorySet, OutcomeKind, Polarity, WeightMatrix,
};

fn to_set(memories: &[Vec<i64>]) -> MemorySet {
    MemorySet::new(memories.iter().map(|m| BipolarVector::from_ints(m).unwrap()).collect()).unwrap()
}

fn ints(v: &BipolarVector) -> Vec<i64> {
    v.iter().map(|&b| b as i64).collect()
}

fn weights(rows: &[Vec<i64>]) -> WeightMatrix {
    WeightMatrix::from_rows(rows).unwrap()
}

// Values below were produced by `oracle::step_by_step_recall` and cross-checked
// by hand; they are frozen so a regression in either side shows up.
const NEURON4_RELABELED: [[i64; 5]; 5] =
    [[0, 3, -1, 1, 1], [3, 0, -1, 1, 1], [-1, -1, 0, 1, 1], [1, 1, 1, 0, -1], [1, 1, 1, -1, 0]];
const NEURON4_PLUS_ORDERED: [i64; 5] = [1, 1, -1, 1, 1];
const NEURON4_PLUS_NORMATIVE: [i64; 5] = [-1, 1, 1, 1, 1];
const NEURON4_PLUS_NETS: [i64; 4] = [3, -2, 1, 0];
const NEURON4_MINUS_ORDERED: [i64; 5] = [-1, -1, 1, -1, 1];
const NEURON4_MINUS_NORMATIVE: [i64; 5] = [1, -1, -1, -1, 1];

#[test]
fn neuron4_oracle_values_are_frozen() {
    let t = oracle::five_weights();
    let order = [4, 3, 1, 2, 5];
    assert_eq!(oracle::relabel(&t, &order), NEURON4_RELABELED.map(Vec::from).to_vec());
    let plus = oracle::step_by_step_recall(&t, &order, &[1]);
    assert_eq!(plus.ordered, NEURON4_PLUS_ORDERED);
    assert_eq!(plus.normative, NEURON4_PLUS_NORMATIVE);
    assert_eq!(plus.nets, NEURON4_PLUS_NETS);
    let minus = oracle::step_by_step_recall(&t, &order, &[-1]);
    assert_eq!(minus.ordered, NEURON4_MINUS_ORDERED);
    assert_eq!(minus.normative, NEURON4_MINUS_NORMATIVE);
}

#[test]
fn neuron4_relabeling_differs_from_neuron3() {
    let t = oracle::five_weights();
    assert_ne!(oracle::relabel(&t, &[4, 3, 1, 2, 5]), oracle::relabel(&t, &[3, 4, 2, 1, 5]));
}

#[test]
fn neuron4_library_matches_oracle() {
    let t = weights(&oracle::five_weights());
    let order = ActivityOrder::from_labels(&[4, 3, 1, 2, 5]).unwrap();
    assert_eq!(permute_weights(&t, &order).unwrap().rows(), NEURON4_RELABELED.map(Vec::from).to_vec());

    let plus = recall(&t, &order, &[1]).unwrap();
    assert_eq!(ints(&plus.ordered_bits), NEURON4_PLUS_ORDERED);
    assert_eq!(ints(&plus.normative_bits), NEURON4_PLUS_NORMATIVE);
    let nets: Vec<i64> = plus.trace.steps.iter().map(|s| s.net_input).collect();
    assert_eq!(nets, NEURON4_PLUS_NETS);

    let minus = recall(&t, &order, &[-1]).unwrap();
    assert_eq!(ints(&minus.normative_bits), NEURON4_MINUS_NORMATIVE);

    let mems = to_set(&oracle::five_memories());
    let p = validate_proximity(&oracle::five_proximity()).unwrap();
    let map = neuron_memory_map(&t, &p, &mems, Polarity::Both).unwrap();
    let e = map.get(4, 1).unwrap();
    assert_eq!(e.order, order);
    assert_eq!(e.outcome.kind, OutcomeKind::NonFixedPoint);
    assert!(!oracle::is_fixed_point(&oracle::five_weights(), &NEURON4_PLUS_NORMATIVE));
    assert_eq!(map.get(4, -1).unwrap().outcome.kind, OutcomeKind::StoredMemory(2));
}

#[test]
fn complement_pair_training_matches_summation() {
    let x = vec![1, -1, -1, 1, 1, -1];
    let nx: Vec<i64> = x.iter().map(|b| -b).collect();
    let t = train_hebbian(&to_set(&[x.clone(), nx]));
    let direct = oracle::hebbian(&[x.clone(), x.iter().map(|b| -b).collect()]);
    assert_eq!(t.rows(), direct);
}

#[test]
fn five_neuron_census_is_exactly_the_memories() {
    let t = oracle::five_weights();
    let scan = oracle::fixed_point_scan(&t);
    let mut expected = oracle::five_memories();
    expected.sort();
    assert_eq!(scan, expected);

    let mems = to_set(&oracle::five_memories());
    let census = enumerate_fixed_points(&weights(&t), &mems).unwrap();
    let mut kinds: Vec<OutcomeKind> = census.iter().map(|o| o.kind).collect();
    kinds.sort_by_key(|k| format!("{k:?}"));
    assert_eq!(kinds, vec![OutcomeKind::StoredMemory(1), OutcomeKind::StoredMemory(2), OutcomeKind::StoredMemory(3)]);
}

#[test]
fn three_neuron_single_memory_census() {
    // T is all ones off the diagonal: only the memory and its complement survive.
    let t = oracle::hebbian(&[vec![1, 1, 1]]);
    assert_eq!(oracle::fixed_point_scan(&t), vec![vec![-1, -1, -1], vec![1, 1, 1]]);
    let mems = to_set(&[vec![1, 1, 1]]);
    let census = enumerate_fixed_points(&train_hebbian(&mems), &mems).unwrap();
    assert_eq!(census.len(), 2);
    assert_eq!(census[0].kind, OutcomeKind::StoredMemory(1));
    assert_eq!(census[1].kind, OutcomeKind::ComplementOf(1));
}

#[test]
fn orders_match_nearest_first_oracle() {
    for rows in [oracle::four_proximity(), oracle::five_proximity()] {
        let p = validate_proximity(&rows).unwrap();
        for k in 1..=rows.len() {
            assert_eq!(p.activity_order(k).unwrap().labels(), oracle::nearest_first(&rows, k));
        }
    }
}

fn memory_sets(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n, 1..=4usize).prop_flat_map(|(n, m)| {
        prop::collection::vec(prop::collection::vec(prop::sample::select(vec![1i64, -1]), n), m)
    })
}

fn symmetric_proximity(n: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::sample::select(vec![0.5, 1.0, 1.5, 2.0, 3.0]), n * n).prop_map(move |raw| {
        let mut p = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                p[i][j] = raw[i * n + j];
                p[j][i] = raw[i * n + j];
            }
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn training_matches_direct_summation(mems in memory_sets(8)) {
        let t = train_hebbian(&to_set(&mems));
        prop_assert_eq!(t.rows(), oracle::hebbian(&mems));
        for row in t.rows() {
            for w in row {
                prop_assert!(w.unsigned_abs() as usize <= mems.len());
            }
        }
    }

    #[test]
    fn storage_test_matches_mat_vec(mems in memory_sets(8), probe in prop::collection::vec(prop::sample::select(vec![1i64, -1]), 8)) {
        let set = to_set(&mems);
        let t = train_hebbian(&set);
        let t_raw = oracle::hebbian(&mems);
        for x in &mems {
            let v = BipolarVector::from_ints(x).unwrap();
            prop_assert_eq!(t.is_stored(&v).unwrap(), oracle::is_fixed_point(&t_raw, x));
        }
        let probe = &probe[..set.dim()];
        let v = BipolarVector::from_ints(probe).unwrap();
        prop_assert_eq!(t.is_stored(&v).unwrap(), oracle::is_fixed_point(&t_raw, probe));
    }

    #[test]
    fn recall_and_census_match_oracles(
        (mems, rows, start, seed_len, seed_bits) in memory_sets(6).prop_flat_map(|mems| {
            let n = mems[0].len();
            (Just(mems), symmetric_proximity(n), 1..=n, 1..=n,
             prop::collection::vec(prop::sample::select(vec![1i64, -1]), n))
        })
    ) {
        let set = to_set(&mems);
        let t = train_hebbian(&set);
        let p = validate_proximity(&rows).unwrap();
        let order = p.activity_order(start).unwrap();
        prop_assert_eq!(order.labels(), oracle::nearest_first(&rows, start));

        let seed: Vec<i8> = seed_bits[..seed_len].iter().map(|&b| b as i8).collect();
        let got = recall(&t, &order, &seed).unwrap();
        let want = oracle::step_by_step_recall(&oracle::hebbian(&mems), &order.labels(), &seed_bits[..seed_len]);
        prop_assert_eq!(ints(&got.ordered_bits), want.ordered);
        prop_assert_eq!(ints(&got.normative_bits), want.normative);
        let nets: Vec<i64> = got.trace.steps.iter().map(|s| s.net_input).collect();
        prop_assert_eq!(nets, want.nets);

        let mut census: Vec<Vec<i64>> = enumerate_fixed_points(&t, &set)
            .unwrap()
            .iter()
            .map(|o| ints(&o.vector))
            .collect();
        census.sort();
        prop_assert_eq!(census, oracle::fixed_point_scan(&oracle::hebbian(&mems)));
    }
}
