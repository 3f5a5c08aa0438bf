use std::path::Path;

use proxrecall_core::{
    capacity_sweep, classify, enumerate_fixed_points_with_limit, lower_triangular, neuron_memory_map, permute_weights,
    recall, train_hebbian, CensusCounts, Polarity,
};

use crate::error::{CliError, Result};
use crate::formats::{parse_seed, read_memories, read_proximity};
use crate::report::{CensusReport, MapReport, OrdersReport, RecallReport, Report, TrainReport};

pub fn cmd_train(memories: &Path) -> Result<Report> {
    let memories = read_memories(memories)?;
    let weights = train_hebbian(&memories);
    Ok(Report::Train(TrainReport { memories, weights }))
}

pub fn cmd_orders(proximity: &Path) -> Result<Report> {
    let proximity = read_proximity(proximity)?;
    let orders = proximity.all_orders();
    Ok(Report::Orders(OrdersReport { symmetric: proximity.is_symmetric(), proximity, orders }))
}

pub fn cmd_recall(memories: &Path, proximity: &Path, start: usize, seed: &str, trace: bool) -> Result<Report> {
    let memories = read_memories(memories)?;
    let proximity = read_proximity(proximity)?;
    let seed = parse_seed(seed)?;
    check_dims(memories.dim(), proximity.dim())?;
    let t = train_hebbian(&memories);
    let order = proximity.activity_order(start)?;
    let permuted = permute_weights(&t, &order)?;
    let b_matrix = lower_triangular(&permuted);
    let result = recall(&t, &order, &seed)?;
    let outcome = classify(&result.normative_bits, &memories, &t)?;
    Ok(Report::Recall(RecallReport {
        start,
        seed,
        order,
        permuted_weights: permuted.weights,
        b_matrix,
        ordered_bits: result.ordered_bits,
        normative_bits: result.normative_bits,
        outcome,
        trace: trace.then_some(result.trace),
    }))
}

pub fn cmd_map(memories: &Path, proximity: &Path, polarity: Polarity) -> Result<Report> {
    let memories = read_memories(memories)?;
    let proximity = read_proximity(proximity)?;
    check_dims(memories.dim(), proximity.dim())?;
    let t = train_hebbian(&memories);
    let map = neuron_memory_map(&t, &proximity, &memories, polarity)?;
    Ok(Report::Map(MapReport { polarity, map }))
}

pub fn cmd_enumerate(memories: &Path, limit: usize) -> Result<Report> {
    let memories = read_memories(memories)?;
    let t = train_hebbian(&memories);
    let fixed_points = enumerate_fixed_points_with_limit(&t, &memories, limit)?;
    let n = t.dim();
    Ok(Report::Enumerate(CensusReport {
        n,
        limit,
        scanned: 1u64 << n,
        counts: CensusCounts::of(&fixed_points),
        fixed_points,
    }))
}

pub fn cmd_capacity(n: usize, m_max: usize, trials: usize, seed: u64) -> Result<Report> {
    if m_max == 0 {
        return Err(CliError::Validation("--m-max must be at least 1".into()));
    }
    let ms: Vec<usize> = (1..=m_max).collect();
    Ok(Report::Capacity(capacity_sweep(n, &ms, trials, seed)?))
}

fn check_dims(memories: usize, proximity: usize) -> Result<()> {
    if memories != proximity {
        return Err(CliError::Validation(format!(
            "memories have {memories} neurons but the proximity matrix is {proximity}x{proximity}"
        )));
    }
    Ok(())
}
