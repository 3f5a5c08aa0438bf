use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use proxrecall_cli::{
    cmd_capacity, cmd_enumerate, cmd_map, cmd_orders, cmd_recall, cmd_train, exit, Format, Report, Result,
};
use proxrecall_core::{Polarity, DEFAULT_ENUMERATION_LIMIT};

/// Hebbian associative memory with proximity-ordered recall.
#[derive(Debug, Parser)]
#[command(name = "proxrecall", version)]
struct Cli {
    /// Output as a human-readable table or a machine-readable JSON document.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolarityArg {
    Both,
    #[value(name = "+1", alias = "1")]
    Plus,
    #[value(name = "-1")]
    Minus,
}

impl From<PolarityArg> for Polarity {
    fn from(p: PolarityArg) -> Self {
        match p {
            PolarityArg::Both => Polarity::Both,
            PolarityArg::Plus => Polarity::Positive,
            PolarityArg::Minus => Polarity::Negative,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Train the Hebbian weight matrix from a memories file.
    Train { memories: PathBuf },

    /// Print the activity order for every starting neuron.
    Orders { proximity: PathBuf },

    /// Recall from one starting neuron.
    Recall {
        memories: PathBuf,
        proximity: PathBuf,
        /// Starting neuron (1-based).
        #[arg(long)]
        start: usize,
        /// Comma-separated bipolar bits clamped on the leading positions of the order.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        seed: String,
        /// Include every step's net input and zero-input flag.
        #[arg(long)]
        trace: bool,
    },

    /// Recall from every neuron and classify each result.
    Map {
        memories: PathBuf,
        proximity: PathBuf,
        #[arg(long, value_enum, default_value = "both", allow_hyphen_values = true)]
        polarity: PolarityArg,
    },

    /// Exhaustively list the fixed points of the trained network.
    Enumerate {
        memories: PathBuf,
        /// Largest neuron count to scan.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },

    /// Monte-Carlo storage rates for m = 1..=m-max random memories.
    Capacity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m_max: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<Report> {
    match cli.command {
        Command::Train { memories } => cmd_train(&memories),
        Command::Orders { proximity } => cmd_orders(&proximity),
        Command::Recall { memories, proximity, start, seed, trace } => {
            cmd_recall(&memories, &proximity, start, &seed, trace)
        }
        Command::Map { memories, proximity, polarity } => cmd_map(&memories, &proximity, polarity.into()),
        Command::Enumerate { memories, limit } => cmd_enumerate(&memories, limit),
        Command::Capacity { n, m_max, trials, seed } => cmd_capacity(n, m_max, trials, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let outcome = run(cli).and_then(|report| report.render(format));
    match outcome {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(exit::IO as u8);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
