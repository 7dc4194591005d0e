//! Bidirectional evaluation of the Padovan sequence and of Padovan-type
//! sequences (`p(n) = p(n-2) + p(n-3)` with arbitrary initials).
//!
//! Everything here is plain windowed iteration: reaching index `n` from the
//! initial window costs `|n - base|` additions. Faster strategies live in
//! [`crate::decimation`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Term};

/// Largest `|n|` any operation will evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexCap(u64);

impl IndexCap {
    pub const DEFAULT: u64 = 10_000_000;

    pub const fn new(cap: u64) -> Self {
        IndexCap(cap)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn check(self, index: i64) -> Result<()> {
        self.check_wide(index as i128)
    }

    /// Same as [`IndexCap::check`] for indices computed in wider arithmetic
    /// (products such as `a * rows`).
    pub fn check_wide(self, index: i128) -> Result<()> {
        if index.unsigned_abs() > self.0 as u128 {
            Err(Error::IndexCapExceeded { index, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for IndexCap {
    fn default() -> Self {
        IndexCap(Self::DEFAULT)
    }
}

impl fmt::Display for IndexCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Three consecutive terms `(p(base), p(base+1), p(base+2))` of a
/// Padovan-type sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceWindow<T> {
    base: i64,
    terms: [T; 3],
}

impl<T: Term> SequenceWindow<T> {
    pub fn new(base: i64, terms: [T; 3]) -> Self {
        SequenceWindow { base, terms }
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn terms(&self) -> &[T; 3] {
        &self.terms
    }

    pub fn into_terms(self) -> [T; 3] {
        self.terms
    }

    /// `p(base)`.
    pub fn front(&self) -> &T {
        &self.terms[0]
    }

    /// Shift the window one index up: `p(base+3) = p(base+1) + p(base)`.
    pub fn advance(&mut self) {
        let oldest = std::mem::replace(&mut self.terms[0], T::zero());
        let next = oldest + &self.terms[1];
        self.terms.rotate_left(1);
        self.terms[2] = next;
        self.base += 1;
    }

    /// Shift the window one index down: `p(base-1) = p(base+2) - p(base)`.
    pub fn retreat(&mut self) {
        let newest = std::mem::replace(&mut self.terms[2], T::zero());
        let prev = newest - &self.terms[0];
        self.terms.rotate_right(1);
        self.terms[0] = prev;
        self.base -= 1;
    }

    /// Move the window so that it starts at `target`.
    pub fn seek(&mut self, target: i64) {
        while self.base < target {
            self.advance();
        }
        while self.base > target {
            self.retreat();
        }
    }
}

/// A sequence obeying `p(n) = p(n-2) + p(n-3)`, pinned down by three
/// initials `p(base), p(base+1), p(base+2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadovanType<T> {
    pub base: i64,
    pub initials: [T; 3],
    pub label: String,
}

impl<T: Term> PadovanType<T> {
    pub fn new(label: impl Into<String>, base: i64, initials: [T; 3]) -> Self {
        PadovanType { base, initials, label: label.into() }
    }

    /// The Padovan sequence itself: `P(0) = P(1) = P(2) = 1`.
    pub fn canonical() -> Self {
        Self::new("padovan", 0, [T::one(), T::one(), T::one()])
    }

    /// The decimation coefficient sequence `rho(a)`: `rho(1), rho(2), rho(3) = 0, 2, 3`.
    pub fn rho_sequence() -> Self {
        Self::new("rho", 1, [T::zero(), lit(2), lit(3)])
    }

    pub fn initial_window(&self) -> SequenceWindow<T> {
        SequenceWindow::new(self.base, self.initials.clone())
    }

    /// Window starting at `n`.
    pub fn window_at(&self, n: i64, cap: IndexCap) -> Result<SequenceWindow<T>> {
        cap.check(n)?;
        let mut window = self.initial_window();
        window.seek(n);
        Ok(window)
    }

    pub fn value(&self, n: i64, cap: IndexCap) -> Result<T> {
        let [first, _, _] = self.window_at(n, cap)?.into_terms();
        Ok(first)
    }

    /// Values at `from, from+1, ..., to` (inclusive).
    pub fn stream(&self, from: i64, to: i64, cap: IndexCap) -> Result<Vec<T>> {
        if from > to {
            return Err(Error::InvalidRange { from, to });
        }
        cap.check(to)?;
        let mut window = self.window_at(from, cap)?;
        let len = (to - from + 1) as usize;
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            if i > 0 {
                window.advance();
            }
            out.push(window.front().clone());
        }
        Ok(out)
    }
}

/// `P(n)` by windowed iteration from `P(0), P(1), P(2)`.
pub fn pad<T: Term>(n: i64, cap: IndexCap) -> Result<T> {
    PadovanType::canonical().value(n, cap)
}

/// `P(n), ..., P(n + len - 1)`.
pub(crate) fn pad_run<T: Term>(n: i64, len: usize, cap: IndexCap) -> Result<Vec<T>> {
    PadovanType::canonical().stream(n, n + len as i64 - 1, cap)
}
