use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{lit, Term};
use crate::sequence::{pad, pad_run, IndexCap};

use super::{matrix_pow_eval, rho, sigma};

/// Below this `|n|` trisection falls back to iteration.
pub const DEFAULT_TRISECTION_THRESHOLD: i64 = 64;

/// Smallest threshold that still guarantees every recursive index is
/// strictly smaller in magnitude than its parent.
const MIN_TRISECTION_THRESHOLD: i64 = 16;

/// Large-index evaluation strategy. All strategies return identical values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalStrategy {
    Iterative,
    MatrixPower,
    Trisection,
    /// Walk the column of `P(n)` in the a-columns table with the a-step recurrence.
    Decimated(i64),
}

impl EvalStrategy {
    pub fn evaluate<T: Term>(&self, n: i64, cap: IndexCap) -> Result<T> {
        match *self {
            EvalStrategy::Iterative => iterative_eval(n, cap),
            EvalStrategy::MatrixPower => matrix_pow_eval(n, cap),
            EvalStrategy::Trisection => trisection_eval(n, cap),
            EvalStrategy::Decimated(a) => column_walk_eval(n, a, cap),
        }
    }
}

impl fmt::Display for EvalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalStrategy::Iterative => f.write_str("iter"),
            EvalStrategy::MatrixPower => f.write_str("matrix"),
            EvalStrategy::Trisection => f.write_str("trisect"),
            EvalStrategy::Decimated(a) => write!(f, "decimated:{a}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown strategy {0:?}; expected iter, matrix, trisect or decimated:<a>")]
pub struct ParseStrategyError(pub String);

impl FromStr for EvalStrategy {
    type Err = ParseStrategyError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "iter" | "iterative" => Ok(EvalStrategy::Iterative),
            "matrix" => Ok(EvalStrategy::MatrixPower),
            "trisect" | "trisection" => Ok(EvalStrategy::Trisection),
            _ => s
                .strip_prefix("decimated:")
                .and_then(|a| a.parse::<i64>().ok())
                .filter(|&a| a >= 1)
                .map(EvalStrategy::Decimated)
                .ok_or_else(|| ParseStrategyError(s.to_owned())),
        }
    }
}

/// Baseline: windowed iteration.
pub fn iterative_eval<T: Term>(n: i64, cap: IndexCap) -> Result<T> {
    pad(n, cap)
}

/// Top-level split used by trisection for index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrisectionPlan {
    pub n: i64,
    pub step: i64,
    /// `n - a`
    pub upper: i64,
    /// `n - 2a`
    pub middle: i64,
    /// `n - 3a`, always 0, 1 or 2.
    pub lowest: i64,
}

pub fn trisection_plan(n: i64) -> TrisectionPlan {
    let step = n.div_euclid(3);
    TrisectionPlan { n, step, upper: n - step, middle: n - 2 * step, lowest: n - 3 * step }
}

struct Trisector<T> {
    threshold: i64,
    /// `P(-threshold - 4) ..= P(threshold + 4)`
    small: Vec<T>,
    cache: HashMap<i64, T>,
}

impl<T: Term> Trisector<T> {
    fn new(threshold: i64) -> Result<Self> {
        let reach = threshold + 4;
        let small = pad_run(-reach, (2 * reach + 1) as usize, IndexCap::new(reach as u64))?;
        Ok(Trisector { threshold, small, cache: HashMap::new() })
    }

    fn value(&mut self, n: i64) -> T {
        if n.abs() < self.threshold {
            return self.small[(n + self.threshold + 4) as usize].clone();
        }
        if let Some(v) = self.cache.get(&n) {
            return v.clone();
        }
        let plan = trisection_plan(n);
        let a = plan.step;
        // rho(a) = 3 P(a-2) - P(a-4), sigma(a) = -(3 P(-a-2) - P(-a-4))
        let rho = lit::<T>(3) * &self.value(a - 2) - self.value(a - 4);
        let neg_rho = lit::<T>(3) * &self.value(-a - 2) - self.value(-a - 4);
        let upper = self.value(plan.upper);
        let middle = self.value(plan.middle);
        let lowest = self.value(plan.lowest);
        let v = rho * &upper - neg_rho * &middle + lowest;
        self.cache.insert(n, v.clone());
        v
    }
}

/// `P(n)` by recursive decimation with `a = floor(n/3)`, so that the lowest
/// term is an initial. Works for negative `n` as well.
pub fn trisection_eval<T: Term>(n: i64, cap: IndexCap) -> Result<T> {
    trisection_eval_with(n, DEFAULT_TRISECTION_THRESHOLD, cap)
}

/// [`trisection_eval`] with an explicit iteration threshold (clamped to at least 16).
pub fn trisection_eval_with<T: Term>(n: i64, threshold: i64, cap: IndexCap) -> Result<T> {
    cap.check(n)?;
    let mut t = Trisector::new(threshold.max(MIN_TRISECTION_THRESHOLD))?;
    Ok(t.value(n))
}

/// `P(n)` by walking column `b` of the a-columns table:
/// `q(m) = rho q(m-1) + sigma q(m-2) + q(m-3)` with `q(m) = P(a*m + b)`,
/// starting from the three head entries. Rows below zero are reached by
/// running the recurrence backwards.
pub fn column_walk_eval<T: Term>(n: i64, a: i64, cap: IndexCap) -> Result<T> {
    if a < 1 {
        return Err(Error::InvalidStep(a));
    }
    cap.check(n)?;
    cap.check(a)?;
    let b = (n - 1).rem_euclid(a) + 1;
    let m = (n - b) / a;

    let rho: T = rho(a, cap)?;
    let sigma: T = sigma(a, cap)?;
    let head = pad_run::<T>(b, (2 * a + 1) as usize, IndexCap::new(cap.get() * 3))?;
    // [q(row), q(row+1), q(row+2)]
    let mut q = [head[0].clone(), head[a as usize].clone(), head[2 * a as usize].clone()];
    drop(head);

    let mut row = 0;
    while row < m {
        let oldest = std::mem::replace(&mut q[0], T::zero());
        let next = rho.clone() * &q[2] + sigma.clone() * &q[1] + oldest;
        q.rotate_left(1);
        q[2] = next;
        row += 1;
    }
    while row > m {
        let newest = std::mem::replace(&mut q[2], T::zero());
        let prev = newest - rho.clone() * &q[1] - sigma.clone() * &q[0];
        q.rotate_right(1);
        q[0] = prev;
        row -= 1;
    }
    let [first, _, _] = q;
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Integer;

    const CAP: IndexCap = IndexCap::new(IndexCap::DEFAULT);

    #[test]
    fn parse_and_display() {
        for s in ["iter", "matrix", "trisect", "decimated:12"] {
            assert_eq!(s.parse::<EvalStrategy>().unwrap().to_string(), s);
        }
        assert!("decimated:0".parse::<EvalStrategy>().is_err());
        assert!("decimated:x".parse::<EvalStrategy>().is_err());
        assert!("fast".parse::<EvalStrategy>().is_err());
    }

    #[test]
    fn p56_split() {
        let plan = trisection_plan(56);
        assert_eq!(plan, TrisectionPlan { n: 56, step: 18, upper: 38, middle: 20, lowest: 2 });
        let direct = rho::<Integer>(18, CAP).unwrap() * pad::<Integer>(38, CAP).unwrap()
            - rho::<Integer>(-18, CAP).unwrap() * pad::<Integer>(20, CAP).unwrap()
            + pad::<Integer>(2, CAP).unwrap();
        assert_eq!(direct, pad::<Integer>(56, CAP).unwrap());
        assert_eq!(trisection_eval_with::<Integer>(56, 16, CAP).unwrap(), direct);
    }

    #[test]
    fn lowest_term_is_an_initial() {
        for n in -500..500 {
            assert!((0..=2).contains(&trisection_plan(n).lowest));
        }
    }

    #[test]
    fn trisection_small_and_negative() {
        assert_eq!(trisection_eval::<i64>(0, CAP).unwrap(), 1);
        for n in -400..400 {
            assert_eq!(
                trisection_eval_with::<Integer>(n, 16, CAP).unwrap(),
                pad::<Integer>(n, CAP).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn column_walk_both_directions() {
        for a in 1..=9 {
            for n in -120..200 {
                assert_eq!(
                    column_walk_eval::<Integer>(n, a, CAP).unwrap(),
                    pad::<Integer>(n, CAP).unwrap(),
                    "n = {n}, a = {a}"
                );
            }
        }
        assert_eq!(column_walk_eval::<i64>(40, 10, CAP).unwrap(), 55405);
        assert_eq!(column_walk_eval::<i64>(40, 0, CAP), Err(Error::InvalidStep(0)));
    }
}
