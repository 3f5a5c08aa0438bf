//! Report documents emitted by every command.
//!
//! The machine form is JSON with a `command` tag; it deserializes back into
//! [`Report`] without loss. The human form is a plain-text rendering of the
//! same data and carries no stability guarantee.

use std::fmt::Write as _;

use proxrecall_core::{
    ActivityOrder, BMatrix, BipolarVector, CapacityReport, CensusCounts, MemorySet, NeuronMemoryMap, Polarity,
    ProximityMatrix, RecallOutcome, RecallTrace, WeightMatrix,
};
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainReport {
    pub memories: MemorySet,
    pub weights: WeightMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrdersReport {
    pub proximity: ProximityMatrix,
    pub symmetric: bool,
    /// Element `k` is the order for starting neuron `k + 1`.
    pub orders: Vec<ActivityOrder>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecallReport {
    pub start: usize,
    pub seed: Vec<i8>,
    pub order: ActivityOrder,
    pub permuted_weights: WeightMatrix,
    pub b_matrix: BMatrix,
    pub ordered_bits: BipolarVector,
    pub normative_bits: BipolarVector,
    pub outcome: RecallOutcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<RecallTrace>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapReport {
    pub polarity: Polarity,
    pub map: NeuronMemoryMap,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub limit: usize,
    pub scanned: u64,
    pub counts: CensusCounts,
    pub fixed_points: Vec<RecallOutcome>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[allow(clippy::large_enum_variant)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Train(TrainReport),
    Orders(OrdersReport),
    Recall(RecallReport),
    Map(MapReport),
    Enumerate(CensusReport),
    Capacity(CapacityReport),
}

impl Report {
    pub fn to_machine(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_machine(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Machine => self.to_machine(),
            Format::Human => Ok(self.to_human()),
        }
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Train(r) => {
                let _ = writeln!(out, "{} memories, {} neurons", r.memories.len(), r.memories.dim());
                out.push_str("T =\n");
                write_matrix(&mut out, &r.weights.rows());
            }
            Report::Orders(r) => {
                let _ = writeln!(out, "{} neurons, symmetric: {}", r.proximity.dim(), yes_no(r.symmetric));
                for o in &r.orders {
                    let _ = writeln!(out, "neuron {}: {o}", o.start());
                }
            }
            Report::Recall(r) => {
                let _ = writeln!(out, "start neuron {}, seed {}", r.start, join(&r.seed));
                let _ = writeln!(out, "order:       {}", r.order);
                out.push_str("permuted T =\n");
                write_matrix(&mut out, &r.permuted_weights.rows());
                out.push_str("B =\n");
                write_matrix(&mut out, &r.b_matrix.rows());
                if let Some(trace) = &r.trace {
                    out.push_str("step  position  neuron  net  bit  zero\n");
                    for (i, s) in trace.steps.iter().enumerate() {
                        let _ = writeln!(
                            out,
                            "{:>4}  {:>8}  {:>6}  {:>3}  {:>3}  {}",
                            i + 1,
                            s.position,
                            s.neuron,
                            s.net_input,
                            s.bit,
                            if s.zero_input { "*" } else { "" }
                        );
                    }
                }
                let _ = writeln!(out, "ordered:     {}", r.ordered_bits);
                let _ = writeln!(out, "normative:   {}", r.normative_bits);
                let _ = writeln!(out, "outcome:     {}", outcome_text(&r.outcome));
            }
            Report::Map(r) => {
                out.push_str("neuron  seed  order       normative     outcome\n");
                for e in &r.map.entries {
                    let _ = writeln!(
                        out,
                        "{:>6}  {:>4}  {:<10}  {:<12}  {}",
                        e.neuron,
                        e.seed,
                        e.order.to_string(),
                        e.result.normative_bits.to_string(),
                        outcome_text(&e.outcome)
                    );
                }
            }
            Report::Enumerate(r) => {
                let _ =
                    writeln!(out, "{} neurons, {} vectors scanned, {} fixed points", r.n, r.scanned, r.counts.total());
                let _ = writeln!(
                    out,
                    "stored memories: {}  complements: {}  spurious: {}",
                    r.counts.stored_memory, r.counts.complement, r.counts.spurious
                );
                for o in &r.fixed_points {
                    let _ = writeln!(out, "{}  {}", o.vector, o.kind.label());
                }
            }
            Report::Capacity(r) => {
                let _ = writeln!(out, "n = {}, trials = {}, seed = {}", r.n, r.trials, r.rng_seed);
                out.push_str("   m   m/n     all stored   per memory\n");
                for row in &r.rows {
                    let _ = writeln!(
                        out,
                        "{:>4}  {:.3}  {:>11.3}  {:>11.3}",
                        row.m,
                        row.m as f64 / r.n as f64,
                        row.all_stored_fraction,
                        row.per_memory_stored_fraction
                    );
                }
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(bits: &[i8]) -> String {
    bits.iter().map(i8::to_string).collect::<Vec<_>>().join(",")
}

fn outcome_text(o: &RecallOutcome) -> String {
    format!("{} (fixed point: {})", o.kind.label(), yes_no(o.fixed_point))
}

fn write_matrix(out: &mut String, rows: &[Vec<i64>]) {
    let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "  [ {} ]", cells.join(" "));
    }
}
