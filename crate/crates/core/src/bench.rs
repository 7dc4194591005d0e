//! Wall-clock comparison of the evaluation strategies.
//!
//! Every strategy is run once per ladder index and the values compared
//! before anything is timed; a disagreement aborts the run.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::decimation::EvalStrategy;
use crate::error::{Error, Result};
use crate::sequence::IndexCap;
use crate::Integer;

pub const DEFAULT_LADDER: [i64; 3] = [1_000, 10_000, 100_000];
pub const DEFAULT_DECIMATION_STEP: i64 = 16;
const LOW_DIGITS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub ladder: Vec<i64>,
    pub reps: usize,
    /// Step used by the `decimated:a` strategy.
    pub decimation_step: i64,
    pub cap: IndexCap,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            ladder: DEFAULT_LADDER.to_vec(),
            reps: 3,
            decimation_step: DEFAULT_DECIMATION_STEP,
            cap: IndexCap::default(),
        }
    }
}

impl BenchConfig {
    pub fn strategies(&self) -> [EvalStrategy; 4] {
        [
            EvalStrategy::Iterative,
            EvalStrategy::MatrixPower,
            EvalStrategy::Trisection,
            EvalStrategy::Decimated(self.decimation_step),
        ]
    }
}

/// Short fingerprint of a value: sign, decimal length and lowest digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Digest {
    pub negative: bool,
    pub digits: usize,
    pub low_digits: String,
}

impl Digest {
    pub fn of(value: &Integer) -> Self {
        let text = value.magnitude().to_string();
        let low_digits = text[text.len().saturating_sub(LOW_DIGITS)..].to_owned();
        Digest { negative: value.sign() == num_bigint::Sign::Minus, digits: text.len(), low_digits }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub strategy: String,
    pub n: i64,
    pub reps: usize,
    pub median_ns: u128,
    pub min_ns: u128,
    pub digest: Digest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub environment: String,
    pub rows: Vec<BenchRow>,
    /// Non-fatal observations, e.g. a median that dropped as `n` grew.
    pub warnings: Vec<String>,
}

fn environment_note() -> String {
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    format!("{}-{} {} build, single-threaded timing", std::env::consts::OS, std::env::consts::ARCH, profile)
}

fn median(sorted: &[Duration]) -> Duration {
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2
    }
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    if config.reps < 3 {
        return Err(Error::TooFewRepetitions(config.reps));
    }
    for &n in &config.ladder {
        config.cap.check(n)?;
    }
    let strategies = config.strategies();
    let mut rows = Vec::new();

    for &n in &config.ladder {
        let values: Vec<Integer> = strategies.iter().map(|s| s.evaluate(n, config.cap)).collect::<Result<_>>()?;
        if let Some((i, _)) = values.iter().enumerate().find(|(_, v)| *v != &values[0]) {
            return Err(Error::DigestMismatch {
                n,
                detail: format!(
                    "{} gives {:?}, {} gives {:?}",
                    strategies[0],
                    Digest::of(&values[0]),
                    strategies[i],
                    Digest::of(&values[i])
                ),
            });
        }
        let digest = Digest::of(&values[0]);
        drop(values);

        for strategy in &strategies {
            let mut times = Vec::with_capacity(config.reps);
            for _ in 0..config.reps {
                let start = Instant::now();
                let v: Integer = strategy.evaluate(n, config.cap)?;
                times.push(start.elapsed());
                std::hint::black_box(v);
            }
            times.sort();
            rows.push(BenchRow {
                strategy: strategy.to_string(),
                n,
                reps: config.reps,
                median_ns: median(&times).as_nanos(),
                min_ns: times[0].as_nanos(),
                digest: digest.clone(),
            });
        }
    }

    let warnings = monotonicity_warnings(&rows);
    Ok(BenchReport { environment: environment_note(), rows, warnings })
}

fn monotonicity_warnings(rows: &[BenchRow]) -> Vec<String> {
    let mut warnings = Vec::new();
    let mut names: Vec<&str> = Vec::new();
    for row in rows {
        if !names.contains(&row.strategy.as_str()) {
            names.push(&row.strategy);
        }
    }
    for name in names {
        let mut series: Vec<&BenchRow> = rows.iter().filter(|r| r.strategy == name).collect();
        series.sort_by_key(|r| r.n);
        for pair in series.windows(2) {
            if pair[1].median_ns < pair[0].median_ns {
                warnings.push(format!(
                    "{name}: median at n = {} ({} ns) is below n = {} ({} ns)",
                    pair[1].n, pair[1].median_ns, pair[0].n, pair[0].median_ns
                ));
            }
        }
    }
    warnings
}
