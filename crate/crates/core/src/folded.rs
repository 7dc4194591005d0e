//! Folded sequences `Q(n) = P(n) + P(-n)` and `R(n) = P(n) - P(-n)`.

use crate::error::{Error, Result};
use crate::scalar::{lit, Term};
use crate::sequence::{pad, IndexCap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedPair<T> {
    pub n: i64,
    pub q: T,
    pub r: T,
}

/// `(Q(n), R(n))` for `n >= 0`.
pub fn folded<T: Term>(n: i64, cap: IndexCap) -> Result<FoldedPair<T>> {
    if n < 0 {
        return Err(Error::NegativeFoldIndex(n));
    }
    let forward = pad::<T>(n, cap)?;
    let backward = pad::<T>(-n, cap)?;
    Ok(FoldedPair { n, q: forward.clone() + &backward, r: forward - backward })
}

/// `(P(n), P(-n)) = ((Q + R) / 2, (Q - R) / 2)`.
pub fn recover<T: Term>(pair: &FoldedPair<T>) -> Result<(T, T)> {
    let two = lit::<T>(2);
    let sum = pair.q.clone() + &pair.r;
    if !(sum.clone() % two.clone()).is_zero() {
        return Err(Error::ParityViolation);
    }
    let diff = pair.q.clone() - &pair.r;
    Ok((sum / two.clone(), diff / two))
}

/// `Q(n) + Q(n-1) - Q(n-3)`, which equals `P(n+1)`.
pub fn q_identity_check<T: Term>(n: i64, cap: IndexCap) -> Result<T> {
    if n < 3 {
        return Err(Error::InvalidIndex { n, min: 3 });
    }
    let q = |k: i64| folded::<T>(k, cap).map(|p| p.q);
    Ok(q(n)? + q(n - 1)? - q(n - 3)?)
}
