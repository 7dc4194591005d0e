use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} exceeds the configured cap of {cap}")]
    IndexCapExceeded { index: i128, cap: u64 },

    #[error("invalid range {from}..{to}: start is after end")]
    InvalidRange { from: i64, to: i64 },

    #[error("closed forms for rho({step}) disagree")]
    FormulaDisagreement { step: i64 },

    #[error("reduction certificate for P({n}) with step {step} does not reproduce P({n})")]
    CertificateMismatch { n: i64, step: i64 },

    #[error("step must be at least 1, got {0}")]
    InvalidStep(i64),

    #[error("index {n} is below the minimum {min}")]
    InvalidIndex { n: i64, min: i64 },

    #[error("table needs at least one column and one row, got {columns}x{rows}")]
    InvalidDimensions { columns: i64, rows: i64 },

    #[error("column {column} is outside 1..={columns}")]
    InvalidColumn { column: i64, columns: i64 },

    #[error("sum numerator for m = {m} is not divisible by 5")]
    DivisibilityViolation { m: i64 },

    #[error("folded pair has odd Q + R")]
    ParityViolation,

    #[error("folded sequences take a non-negative index, got {0}")]
    NegativeFoldIndex(i64),

    #[error("strategies disagree at n = {n}: {detail}")]
    DigestMismatch { n: i64, detail: String },

    #[error("benchmark needs at least 3 repetitions, got {0}")]
    TooFewRepetitions(usize),
}
