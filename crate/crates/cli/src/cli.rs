use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use padovan::decimation::EvalStrategy;

#[derive(Debug, Parser)]
#[command(name = "padovan", version, about = "Exact Padovan numbers, decimation identities and evaluation strategies")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Omit run-dependent metadata (timestamps) so identical arguments give identical output.
    #[arg(long, global = true)]
    pub deterministic: bool,

    /// Largest |index| any command may evaluate. Overrides PADOVAN_INDEX_CAP.
    #[arg(long, global = true)]
    pub cap: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P(n).
    Eval {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        /// iter, matrix, trisect or decimated:<a>
        #[arg(long, default_value = "iter")]
        strategy: EvalStrategy,
        /// Cross-check every strategy and exit 1 on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// Print (a, rho(a), sigma(a)) for a range of steps.
    Coeffs {
        /// Inclusive range lo..hi, or a single step.
        #[arg(allow_hyphen_values = true)]
        range: Span,
    },
    /// Express P(n) over the head entries P(2a+b), P(a+b), P(b) of its column.
    Reduce { n: i64, a: i64 },
    /// Print the a-columns table.
    Table { columns: i64, rows: i64 },
    /// Column partial sums r(0..=m) of column b in the a-columns table.
    Sums { columns: i64, column: i64, m: i64 },
    /// Folded values Q(n) = P(n) + P(-n), R(n) = P(n) - P(-n).
    Qr {
        /// Inclusive range lo..hi of non-negative indices, or a single index.
        range: Span,
    },
    /// Run the identity catalogue; exits 1 on any failure.
    Verify {
        /// Seed for the randomized certificate samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of randomized certificate samples.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Print every failure in plain output, not just the counts.
        #[arg(long)]
        verbose: bool,
    },
    /// Time the evaluation strategies over an index ladder.
    Bench {
        /// Comma-separated ladder of indices.
        #[arg(long, value_delimiter = ',', default_values_t = padovan::bench::DEFAULT_LADDER)]
        ladder: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Step of the decimated strategy.
        #[arg(long, default_value_t = padovan::bench::DEFAULT_DECIMATION_STEP)]
        step: i64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Coeffs { .. } => "coeffs",
            Command::Reduce { .. } => "reduce",
            Command::Table { .. } => "table",
            Command::Sums { .. } => "sums",
            Command::Qr { .. } => "qr",
            Command::Verify { .. } => "verify",
            Command::Bench { .. } => "bench",
        }
    }
}

/// `lo..hi` (inclusive) or a single integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad bound {t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("range {lo}..{hi} is empty"));
        }
        Ok(Span { lo, hi })
    }
}
